#include "lahyper/search.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "lahyper/detail/parallel.hpp"
#include "lahyper/error.hpp"

namespace lahyper {

  namespace {
    struct Permutations {
      std::vector<std::vector<std::size_t>>  forward;
      std::vector<std::vector<std::size_t>>  inverse;
      // set_map[k][mask] is the image of the subset `mask` under forward[k].
      std::vector<std::vector<std::uint8_t>> set_map;
    };

    // All n! permutations in lexicographic order, identity first.
    Permutations const& permutations(std::size_t n) {
      static std::array<Permutations, max_canonical_order + 1> const cache = [] {
        std::array<Permutations, max_canonical_order + 1> all;
        for (std::size_t k = 0; k <= max_canonical_order; ++k) {
          std::vector<std::size_t> p(k);
          std::iota(p.begin(), p.end(), std::size_t{0});
          do {
            std::vector<std::size_t>  inv(k);
            std::vector<std::uint8_t> map(std::size_t{1} << k);
            for (std::size_t i = 0; i < k; ++i) {
              inv[p[i]] = i;
            }
            for (std::size_t mask = 0; mask < map.size(); ++mask) {
              std::uint8_t image = 0;
              for (std::size_t i = 0; i < k; ++i) {
                if ((mask >> i) & 1U) {
                  image |= static_cast<std::uint8_t>(1U << p[i]);
                }
              }
              map[mask] = image;
            }
            all[k].forward.push_back(p);
            all[k].inverse.push_back(std::move(inv));
            all[k].set_map.push_back(std::move(map));
          } while (std::next_permutation(p.begin(), p.end()));
        }
        return all;
      }();
      return cache[n];
    }

    void require_canonical_order(std::size_t n) {
      if (n > max_canonical_order) {
        throw LimitError("canonical forms are computed for order <= 6, got "
                         + std::to_string(n));
      }
    }

    // Is the row-major sequence `cells` minimal among all its relabelings?
    template <typename Cells>
    bool is_canonical(std::size_t n, Cells const& cells) {
      auto const& perms = permutations(n);
      for (std::size_t k = 1; k < perms.forward.size(); ++k) {
        auto const& inv = perms.inverse[k];
        auto const& map = perms.set_map[k];
        for (std::size_t p = 0; p < n * n; ++p) {
          auto const image =
              map[static_cast<std::size_t>(cells[inv[p / n] * n + inv[p % n]])];
          auto const here = static_cast<std::uint8_t>(cells[p]);
          if (image != here) {
            if (image < here) {
              return false;
            }
            break;
          }
        }
      }
      return true;
    }

    struct Instance {
      LawInfo const*               law;
      std::array<std::uint64_t, 4> tuple;
      // Largest row-major position read directly by a hyper term.
      std::size_t                  static_max;
    };

    class Enumerator {
     public:
      using Accept = std::function<void(std::span<std::uint64_t const>)>;

      Enumerator(std::size_t                  n,
                 std::vector<Instance> const& instances,
                 bool                         prune,
                 bool                         canonical_only,
                 Accept                       accept)
          : n_(n),
            cells_(n * n),
            top_((std::uint64_t{1} << n) - 1),
            instances_(instances),
            prune_(prune),
            canonical_only_(canonical_only),
            accept_(std::move(accept)) {}

      std::uint64_t run(std::uint64_t first_entry) {
        accepted_ = 0;
        entries_[0] = first_entry;
        if (!prune_ || holds_at(0)) {
          descend(1);
        }
        return accepted_;
      }

     private:
      void descend(std::size_t pos) {
        if (pos == cells_) {
          if (!prune_ && !holds_everywhere()) {
            return;
          }
          std::span<std::uint64_t const> cells(entries_.data(), cells_);
          if (canonical_only_ && !is_canonical(n_, cells)) {
            return;
          }
          ++accepted_;
          if (accept_) {
            accept_(cells);
          }
          return;
        }
        for (std::uint64_t v = 1; v <= top_; ++v) {
          entries_[pos] = v;
          if (!prune_ || holds_at(pos)) {
            descend(pos + 1);
          }
        }
      }

      // Checks every instance whose last-read entry is exactly `pos`;
      // instances finishing earlier passed on an ancestor node.
      bool holds_at(std::size_t pos) const {
        for (auto const& inst : instances_) {
          if (inst.static_max > pos) {
            break;
          }
          std::size_t reach = 0;
          auto entry = [&](std::size_t x, std::size_t y) {
            std::size_t const p = x * n_ + y;
            reach = std::max(reach, p);
            return ElemSet(p <= pos ? entries_[p] : 0);
          };
          auto const lhs = evaluate_side(inst.law->lhs, inst.tuple, entry);
          if (reach > pos) {
            continue;
          }
          auto const rhs = evaluate_side(inst.law->rhs, inst.tuple, entry);
          if (reach == pos && lhs != rhs) {
            return false;
          }
        }
        return true;
      }

      bool holds_everywhere() const {
        auto entry = [&](std::size_t x, std::size_t y) {
          return ElemSet(entries_[x * n_ + y]);
        };
        return std::all_of(
            instances_.begin(), instances_.end(), [&](Instance const& inst) {
              return evaluate_side(inst.law->lhs, inst.tuple, entry)
                     == evaluate_side(inst.law->rhs, inst.tuple, entry);
            });
      }

      std::size_t                        n_;
      std::size_t                        cells_;
      std::uint64_t                      top_;
      std::vector<Instance> const&       instances_;
      bool                               prune_;
      bool                               canonical_only_;
      Accept                             accept_;
      std::array<std::uint64_t, 16>      entries_{};
      std::uint64_t                      accepted_ = 0;
    };

    std::vector<Instance> make_instances(std::size_t                n,
                                         std::vector<LawId> const& laws) {
      std::vector<Instance> out;
      for (auto id : laws) {
        LawInfo const& info = law_info(id);
        if (info.scope != LawScope::element) {
          throw DomainError("enumeration supports element-scope laws only, got "
                            + std::string(info.name));
        }
        std::size_t total = 1;
        for (std::size_t i = 0; i < info.arity; ++i) {
          total *= n;
        }
        for (std::size_t code = 0; code < total; ++code) {
          Instance inst{&info, {}, 0};
          std::size_t rest = code;
          for (std::size_t i = info.arity; i-- > 0;) {
            inst.tuple[i] = rest % n;
            rest /= n;
          }
          for (auto const& side : {info.lhs, info.rhs}) {
            for (auto const& term : side.terms()) {
              if (term.kind == Term::Kind::hyper) {
                inst.static_max = std::max<std::size_t>(
                    inst.static_max,
                    inst.tuple[term.first] * n + inst.tuple[term.second]);
              }
            }
          }
          out.push_back(inst);
        }
      }
      std::stable_sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
        return x.static_max < y.static_max;
      });
      return out;
    }
  }  // namespace

  std::uint64_t enumerate_tables(SearchSpec const& spec, TableSink const& sink) {
    std::size_t const n = spec.n;
    if (n < 1 || n > max_enumeration_order) {
      throw LimitError("enumeration supports orders 1..4, got "
                       + std::to_string(n));
    }
    auto const instances = make_instances(n, spec.laws);
    bool const iso  = spec.mode == SearchMode::count_iso
                     || spec.mode == SearchMode::emit_iso;
    bool const emit = (spec.mode == SearchMode::emit
                       || spec.mode == SearchMode::emit_iso)
                      && static_cast<bool>(sink);
    std::uint64_t const tasks   = (std::uint64_t{1} << n) - 1;
    std::size_t const   workers = detail::resolve_workers(spec.workers);

    auto to_table = [n](std::span<std::uint64_t const> cells) {
      std::vector<ElemSet> entries(cells.begin(), cells.end());
      return HyperTable::with_default_names(n, std::move(entries));
    };

    std::uint64_t total = 0;
    if (workers <= 1) {
      Enumerator::Accept accept;
      if (emit) {
        accept = [&](std::span<std::uint64_t const> cells) {
          sink(to_table(cells));
        };
      }
      Enumerator e(n, instances, spec.prune, iso, accept);
      for (std::uint64_t v = 1; v <= tasks; ++v) {
        total += e.run(v);
      }
      return total;
    }

    // One task per value of the first entry; subtrees are disjoint and
    // ordered, so concatenating task buffers preserves global order.
    std::vector<std::uint64_t>             counts(tasks, 0);
    std::vector<std::vector<std::uint8_t>> buffers(tasks);
    detail::parallel_for(tasks, workers, [&](std::size_t task) {
      Enumerator::Accept accept;
      if (emit) {
        accept = [&buffers, task](std::span<std::uint64_t const> cells) {
          for (auto c : cells) {
            buffers[task].push_back(static_cast<std::uint8_t>(c));
          }
        };
      }
      Enumerator e(n, instances, spec.prune, iso, accept);
      counts[task] = e.run(task + 1);
    });
    std::vector<std::uint64_t> cells(n * n);
    for (std::size_t task = 0; task < tasks; ++task) {
      total += counts[task];
      auto const& buf = buffers[task];
      for (std::size_t off = 0; off < buf.size(); off += cells.size()) {
        std::copy_n(buf.begin() + static_cast<std::ptrdiff_t>(off),
                    cells.size(),
                    cells.begin());
        sink(to_table(cells));
      }
    }
    return total;
  }

  HyperTable relabel(HyperTable const& t, std::span<std::size_t const> perm) {
    std::size_t const n = t.order();
    if (perm.size() != n) {
      throw DomainError("permutation size does not match the table order");
    }
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
      if (p >= n || seen[p]) {
        throw DomainError("not a permutation of the carrier");
      }
      seen[p] = true;
    }
    std::vector<ElemSet> entries(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        ElemSet image;
        for (auto x : t(a, b)) {
          image |= ElemSet::singleton(perm[x]);
        }
        entries[perm[a] * n + perm[b]] = image;
      }
    }
    return HyperTable(t.names(), std::move(entries));
  }

  CanonicalKey canonical_form(HyperTable const& t) {
    std::size_t const n = t.order();
    require_canonical_order(n);
    auto const&               perms = permutations(n);
    std::vector<std::uint8_t> best;
    std::vector<std::uint8_t> candidate(n * n);
    for (std::size_t k = 0; k < perms.forward.size(); ++k) {
      auto const& inv = perms.inverse[k];
      auto const& map = perms.set_map[k];
      for (std::size_t p = 0; p < n * n; ++p) {
        candidate[p] = map[t(inv[p / n], inv[p % n]).bits()];
      }
      if (best.empty() || candidate < best) {
        best = candidate;
      }
    }
    return CanonicalKey(n, std::move(best));
  }

  std::optional<std::vector<std::size_t>> are_isomorphic(HyperTable const& t1,
                                                          HyperTable const& t2) {
    if (t1.order() != t2.order()) {
      throw DomainError("tables of orders " + std::to_string(t1.order())
                        + " and " + std::to_string(t2.order())
                        + " cannot be isomorphic");
    }
    std::size_t const n = t1.order();
    require_canonical_order(n);
    auto const& perms = permutations(n);
    for (std::size_t k = 0; k < perms.forward.size(); ++k) {
      auto const& phi = perms.forward[k];
      auto const& map = perms.set_map[k];
      bool        ok  = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          ok = map[t1(a, b).bits()] == t2(phi[a], phi[b]).bits();
        }
      }
      if (ok) {
        return phi;
      }
    }
    return std::nullopt;
  }

}  // namespace lahyper
