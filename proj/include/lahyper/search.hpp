#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "lahyper/core.hpp"
#include "lahyper/laws.hpp"

namespace lahyper {

  enum class SearchMode { count, emit, count_iso, emit_iso };

  struct SearchSpec {
    std::size_t        n = 1;
    // Element-scope laws only.
    std::vector<LawId> laws;
    SearchMode         mode = SearchMode::count;
    // Check each law instance as soon as its entries are assigned. With
    // pruning off every complete table is generated and checked.
    bool               prune = true;
    // 0 = one per hardware thread.
    std::size_t        workers = 1;
  };

  inline constexpr std::size_t max_enumeration_order = 4;
  inline constexpr std::size_t max_canonical_order   = 6;

  using TableSink = std::function<void(HyperTable const&)>;

  // Visits every table of order n (entries nonempty) satisfying all laws,
  // in lexicographic order of the row-major entry sequence. In the iso
  // modes only the canonical representative of each isomorphism class is
  // visited and counted. The sink always runs on the calling thread.
  // Throws LimitError unless 1 <= n <= 4 and DomainError for set laws.
  std::uint64_t enumerate_tables(SearchSpec const& spec, TableSink const& sink = {});

  // Row-major entry bitmasks of the relabeling that minimizes them.
  class CanonicalKey {
   public:
    CanonicalKey(std::size_t order, std::vector<std::uint8_t> bytes)
        : order_(order), bytes_(std::move(bytes)) {}

    std::size_t order() const noexcept {
      return order_;
    }
    std::span<std::uint8_t const> bytes() const noexcept {
      return bytes_;
    }

    friend auto operator<=>(CanonicalKey const&, CanonicalKey const&) = default;
    friend bool operator==(CanonicalKey const&, CanonicalKey const&) = default;

   private:
    std::size_t               order_;
    std::vector<std::uint8_t> bytes_;
  };

  // Throws LimitError above order 6.
  CanonicalKey canonical_form(HyperTable const& t);

  // The table π(t) with π(t)(π(a), π(b)) = π(t(a, b)); names stay in place.
  HyperTable relabel(HyperTable const& t, std::span<std::size_t const> perm);

  // A bijection φ with φ(t1(a, b)) = t2(φ(a), φ(b)) for all a, b, or
  // nullopt. Throws DomainError when the orders differ and LimitError above
  // order 6.
  std::optional<std::vector<std::size_t>> are_isomorphic(HyperTable const& t1,
                                                          HyperTable const& t2);

}  // namespace lahyper
