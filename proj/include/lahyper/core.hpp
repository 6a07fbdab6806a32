#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lahyper {

  // A subset of the carrier {0, ..., n-1}, n <= 64, as one machine word.
  // Element i is bit i; the element order is the table header order.
  // The empty set is representable; operations that need a member of
  // P*(H) reject it explicitly.
  class ElemSet {
   public:
    class iterator {
     public:
      using iterator_category = std::forward_iterator_tag;
      using value_type        = std::size_t;
      using difference_type   = std::ptrdiff_t;
      using pointer           = void;
      using reference         = std::size_t;

      constexpr iterator() = default;
      constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

      constexpr std::size_t operator*() const noexcept {
        return static_cast<std::size_t>(std::countr_zero(rest_));
      }
      constexpr iterator& operator++() noexcept {
        rest_ &= rest_ - 1;
        return *this;
      }
      constexpr iterator operator++(int) noexcept {
        auto tmp = *this;
        ++*this;
        return tmp;
      }
      friend constexpr bool operator==(iterator, iterator) = default;

     private:
      std::uint64_t rest_ = 0;
    };

    constexpr ElemSet() = default;
    constexpr explicit ElemSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr ElemSet singleton(std::size_t i) noexcept {
      return ElemSet(std::uint64_t{1} << i);
    }
    // The whole carrier of a table with n elements.
    static constexpr ElemSet full(std::size_t n) noexcept {
      return ElemSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const noexcept {
      return bits_;
    }
    constexpr bool empty() const noexcept {
      return bits_ == 0;
    }
    constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(bits_));
    }
    constexpr bool contains(std::size_t i) const noexcept {
      return i < 64 && ((bits_ >> i) & 1U) != 0;
    }
    constexpr bool subset_of(ElemSet other) const noexcept {
      return (bits_ & ~other.bits_) == 0;
    }
    // Largest member; undefined for the empty set.
    constexpr std::size_t last() const noexcept {
      return 63 - static_cast<std::size_t>(std::countl_zero(bits_));
    }

    constexpr iterator begin() const noexcept {
      return iterator(bits_);
    }
    constexpr iterator end() const noexcept {
      return iterator(0);
    }

    constexpr ElemSet& operator|=(ElemSet other) noexcept {
      bits_ |= other.bits_;
      return *this;
    }
    friend constexpr ElemSet operator|(ElemSet x, ElemSet y) noexcept {
      return ElemSet(x.bits_ | y.bits_);
    }
    friend constexpr ElemSet operator&(ElemSet x, ElemSet y) noexcept {
      return ElemSet(x.bits_ & y.bits_);
    }
    // Set difference.
    friend constexpr ElemSet operator-(ElemSet x, ElemSet y) noexcept {
      return ElemSet(x.bits_ & ~y.bits_);
    }
    // Ordered by bitmask value, which is the canonical report order.
    friend constexpr auto operator<=>(ElemSet, ElemSet) = default;

   private:
    std::uint64_t bits_ = 0;
  };

  // Unvalidated table contents as they come out of a parser or a caller.
  // Line/column fields are only used to anchor diagnostics.
  struct RawCell {
    std::vector<std::string> members;
    std::size_t              line = 0;
    std::size_t              col  = 0;
  };

  struct RawRow {
    std::string          name;
    std::vector<RawCell> cells;
    std::size_t          line = 0;
  };

  struct RawTable {
    std::vector<std::string> names;
    std::size_t              header_line = 0;
    std::vector<RawRow>      rows;
  };

  // A finite hypergroupoid: carrier names and the n x n Cayley table of
  // nonempty subsets. Immutable once constructed.
  class HyperTable {
   public:
    static constexpr std::size_t max_order = 64;

    // Throws TableError listing every violation.
    HyperTable(std::vector<std::string> names, std::vector<ElemSet> entries);

    // Names a, b, c, ... (e26, e27, ... past z).
    static HyperTable with_default_names(std::size_t         n,
                                         std::vector<ElemSet> entries);

    std::size_t order() const noexcept {
      return names_.size();
    }
    std::vector<std::string> const& names() const noexcept {
      return names_;
    }
    std::string const& name(std::size_t i) const {
      return names_.at(i);
    }
    std::optional<std::size_t> index_of(std::string_view name) const;

    // Unchecked entry access, row-major.
    ElemSet operator()(std::size_t a, std::size_t b) const noexcept {
      return entries_[a * names_.size() + b];
    }
    std::span<ElemSet const> entries() const noexcept {
      return entries_;
    }
    ElemSet carrier() const noexcept {
      return ElemSet::full(names_.size());
    }

    friend bool operator==(HyperTable const&, HyperTable const&) = default;

   private:
    std::vector<std::string> names_;
    std::vector<ElemSet>     entries_;
  };

  std::vector<std::string> default_names(std::size_t n);

  // Nonempty; no whitespace, braces, commas, parentheses, '*', '#', ':'.
  bool is_valid_element_name(std::string_view name) noexcept;

  // a o b. Throws DomainError when an index is out of range.
  ElemSet hyper(HyperTable const& t, std::size_t a, std::size_t b);

  // A * B, the union of a o b over a in A, b in B. Throws EmptyOperand
  // when either side is empty and DomainError when a set leaves the carrier.
  ElemSet set_product(HyperTable const& t, ElemSet lhs, ElemSet rhs);

  HyperTable validate_table(RawTable const& raw);

  // "{a,c}" in element order.
  std::string format_set(HyperTable const& t, ElemSet s);
  std::string format_set(std::span<std::string const> names, ElemSet s);

}  // namespace lahyper
