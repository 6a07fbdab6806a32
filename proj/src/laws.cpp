#include "lahyper/laws.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <initializer_list>
#include <random>
#include <string>

#include "lahyper/detail/parallel.hpp"
#include "lahyper/error.hpp"

namespace lahyper {

  namespace {
    using Kind = Term::Kind;

    constexpr Term hyp(std::uint8_t x, std::uint8_t y) {
      return {Kind::hyper, x, y};
    }
    constexpr Term single(std::uint8_t x) {
      return {Kind::singleton, x, 0};
    }
    constexpr Term var(std::uint8_t x) {
      return {Kind::variable, x, 0};
    }
    constexpr Term star(std::uint8_t l, std::uint8_t r) {
      return {Kind::star, l, r};
    }

    LawSide side(std::initializer_list<Term> terms) {
      LawSide s;
      for (auto const& term : terms) {
        s.nodes[s.size++] = term;
      }
      return s;
    }

    std::array<LawInfo, 7> const& catalog() {
      static std::array<LawInfo, 7> const laws = {{
          {LawId::left_invertive,
           "LeftInvertive",
           LawScope::element,
           3,
           side({hyp(0, 1), single(2), star(0, 1)}),
           side({hyp(2, 1), single(0), star(0, 1)})},
          {LawId::associative,
           "Associative",
           LawScope::element,
           3,
           side({hyp(0, 1), single(2), star(0, 1)}),
           side({single(0), hyp(1, 2), star(0, 1)})},
          // (x∘x)*{x} = {x}*(x∘x): the LA-semigroup reading (xx)x = x(xx).
          {LawId::locally_associative,
           "LocallyAssociative",
           LawScope::element,
           1,
           side({hyp(0, 0), single(0), star(0, 1)}),
           side({single(0), hyp(0, 0), star(0, 1)})},
          {LawId::commutative,
           "Commutative",
           LawScope::element,
           2,
           side({hyp(0, 1)}),
           side({hyp(1, 0)})},
          {LawId::medial,
           "Medial",
           LawScope::element,
           4,
           side({hyp(0, 1), hyp(2, 3), star(0, 1)}),
           side({hyp(0, 2), hyp(1, 3), star(0, 1)})},
          {LawId::set_left_invertive,
           "SetLeftInvertive",
           LawScope::set,
           3,
           side({var(0), var(1), star(0, 1), var(2), star(2, 3)}),
           side({var(2), var(1), star(0, 1), var(0), star(2, 3)})},
          {LawId::set_medial,
           "SetMedial",
           LawScope::set,
           4,
           side({var(0), var(1), star(0, 1), var(2), var(3), star(3, 4),
                 star(2, 5)}),
           side({var(0), var(2), star(0, 1), var(1), var(3), star(3, 4),
                 star(2, 5)})},
      }};
      return laws;
    }

    constexpr std::array<LawId, 7> law_ids = {LawId::left_invertive,
                                              LawId::associative,
                                              LawId::locally_associative,
                                              LawId::commutative,
                                              LawId::medial,
                                              LawId::set_left_invertive,
                                              LawId::set_medial};

    std::string render_node(LawSide const&               s,
                            std::size_t                  i,
                            std::span<std::string const> vars,
                            bool                         nested) {
      Term const& term = s.nodes[i];
      switch (term.kind) {
        case Kind::hyper: {
          auto text = vars[term.first] + "∘" + vars[term.second];
          return nested ? "(" + text + ")" : text;
        }
        case Kind::singleton:
          return "{" + vars[term.first] + "}";
        case Kind::variable:
          return vars[term.first];
        case Kind::star: {
          auto text = render_node(s, term.first, vars, true) + "*"
                      + render_node(s, term.second, vars, true);
          return nested ? "(" + text + ")" : text;
        }
      }
      return {};
    }

    Witness make_witness(LawScope                       scope,
                         std::span<std::uint64_t const> tuple,
                         ElemSet                        lhs,
                         ElemSet                        rhs) {
      Witness w;
      for (auto v : tuple) {
        if (scope == LawScope::element) {
          w.elements.push_back(static_cast<std::size_t>(v));
        } else {
          w.subsets.emplace_back(v);
        }
      }
      w.lhs = lhs;
      w.rhs = rhs;
      return w;
    }

    std::uint64_t power(std::uint64_t base, std::size_t exp) {
      std::uint64_t out = 1;
      for (std::size_t i = 0; i < exp; ++i) {
        out *= base;
      }
      return out;
    }

    // Visits every tuple over `domain` whose first coordinate is
    // domain[first], in lexicographic order. Stops when visit returns false.
    template <typename Visit>
    void scan_slice(std::span<std::uint64_t const> domain,
                    std::size_t                    arity,
                    std::size_t                    first,
                    Visit&&                        visit) {
      std::vector<std::size_t>   pos(arity, 0);
      std::vector<std::uint64_t> tuple(arity, domain[0]);
      pos[0]   = first;
      tuple[0] = domain[first];
      while (true) {
        if (!visit(std::span<std::uint64_t const>(tuple))) {
          return;
        }
        std::size_t k = arity;
        while (k > 1) {
          --k;
          if (++pos[k] < domain.size()) {
            tuple[k] = domain[pos[k]];
            break;
          }
          pos[k]   = 0;
          tuple[k] = domain[0];
          if (k == 1) {
            return;
          }
        }
        if (arity == 1) {
          return;
        }
      }
    }

    LawReport scan_exhaustive(HyperTable const&              t,
                              LawInfo const&                 info,
                              std::span<std::uint64_t const> domain,
                              CheckOptions const&            opts) {
      auto entry = [&t](std::size_t x, std::size_t y) { return t(x, y); };
      std::size_t const slices = domain.size();

      LawReport report;
      report.law               = info.id;
      report.domain_size       = domain.size();
      report.instances_checked = power(domain.size(), info.arity);

      // First pass: the first violation of each slice, skipping slices
      // that cannot beat one already found.
      std::vector<std::optional<Witness>> firsts(slices);
      std::atomic<std::size_t>            best{slices};
      detail::parallel_for(slices, opts.workers, [&](std::size_t s) {
        if (s > best.load()) {
          return;
        }
        scan_slice(domain, info.arity, s, [&](auto tuple) {
          auto lhs = evaluate_side(info.lhs, tuple, entry);
          auto rhs = evaluate_side(info.rhs, tuple, entry);
          if (lhs != rhs) {
            firsts[s] = make_witness(info.scope, tuple, lhs, rhs);
            auto current = best.load();
            while (s < current && !best.compare_exchange_weak(current, s)) {
            }
            return false;
          }
          return true;
        });
      });
      for (auto& w : firsts) {
        if (w) {
          report.first_witness = std::move(w);
          break;
        }
      }
      report.verdict = report.first_witness ? Verdict::fails : Verdict::holds;

      if ((opts.count_violations || opts.all_witnesses)) {
        std::vector<std::uint64_t>        counts(slices, 0);
        std::vector<std::vector<Witness>> lists(slices);
        if (report.first_witness) {
          detail::parallel_for(slices, opts.workers, [&](std::size_t s) {
            scan_slice(domain, info.arity, s, [&](auto tuple) {
              auto lhs = evaluate_side(info.lhs, tuple, entry);
              auto rhs = evaluate_side(info.rhs, tuple, entry);
              if (lhs != rhs) {
                ++counts[s];
                if (opts.all_witnesses) {
                  lists[s].push_back(
                      make_witness(info.scope, tuple, lhs, rhs));
                }
              }
              return true;
            });
          });
        }
        std::uint64_t total = 0;
        for (std::size_t s = 0; s < slices; ++s) {
          total += counts[s];
          for (auto& w : lists[s]) {
            report.witnesses.push_back(std::move(w));
          }
        }
        report.violation_count = total;
      }
      return report;
    }

    LawInfo const& require_scope(LawId law, LawScope scope) {
      LawInfo const& info = law_info(law);
      if (info.scope != scope) {
        throw DomainError(std::string(info.name)
                          + (scope == LawScope::element
                                 ? " quantifies over subsets; use the "
                                   "set-law checker"
                                 : " quantifies over elements; use the "
                                   "element-law checker"));
      }
      return info;
    }
  }  // namespace

  LawInfo const& law_info(LawId law) {
    return catalog().at(static_cast<std::size_t>(law));
  }

  std::span<LawId const> all_laws() noexcept {
    return law_ids;
  }

  std::string_view to_string(LawId law) noexcept {
    return catalog()[static_cast<std::size_t>(law)].name;
  }

  std::optional<LawId> parse_law_id(std::string_view text) {
    auto lower = [](std::string_view s) {
      std::string out(s);
      for (auto& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      }
      return out;
    };
    auto const wanted = lower(text);
    for (auto const& info : catalog()) {
      if (lower(info.name) == wanted) {
        return info.id;
      }
    }
    return std::nullopt;
  }

  std::string render_side(LawSide const&               side,
                          std::span<std::string const> variables) {
    return render_node(side, side.size - 1, variables, false);
  }

  LawReport check_law(HyperTable const& t, LawId law, CheckOptions opts) {
    LawInfo const&             info = require_scope(law, LawScope::element);
    std::vector<std::uint64_t> domain(t.order());
    for (std::size_t i = 0; i < domain.size(); ++i) {
      domain[i] = i;
    }
    return scan_exhaustive(t, info, domain, opts);
  }

  LawReport check_set_law(HyperTable const& t,
                          LawId             law,
                          SetCheckScope     scope,
                          CheckOptions      opts) {
    LawInfo const& info = require_scope(law, LawScope::set);
    auto const     mask = t.carrier().bits();

    if (std::holds_alternative<Exhaustive>(scope)) {
      if (t.order() > max_exhaustive_set_order) {
        throw ExhaustiveTooLarge(
            "exhaustive subset scan needs order <= 4, table has order "
            + std::to_string(t.order()));
      }
      std::vector<std::uint64_t> domain;
      for (std::uint64_t m = 1; m <= mask; ++m) {
        domain.push_back(m);
      }
      return scan_exhaustive(t, info, domain, opts);
    }

    auto const [seed, count] = std::get<Sampled>(scope);
    LawReport report;
    report.law               = law;
    report.exhaustive        = false;
    report.domain_size       = 0;
    report.instances_checked = count;

    std::mt19937_64            rng(seed);
    std::vector<std::uint64_t> tuple(info.arity);
    std::vector<Witness>       found;
    auto entry = [&t](std::size_t x, std::size_t y) { return t(x, y); };
    for (std::uint64_t s = 0; s < count; ++s) {
      for (auto& v : tuple) {
        // Uniform over nonempty subsets: mask the draw, reject zero.
        do {
          v = rng() & mask;
        } while (v == 0);
      }
      auto lhs = evaluate_side(info.lhs, tuple, entry);
      auto rhs = evaluate_side(info.rhs, tuple, entry);
      if (lhs != rhs) {
        found.push_back(make_witness(info.scope, tuple, lhs, rhs));
      }
    }
    auto by_tuple = [](Witness const& x, Witness const& y) {
      return x.subsets < y.subsets;
    };
    std::stable_sort(found.begin(), found.end(), by_tuple);
    if (!found.empty()) {
      report.first_witness = found.front();
    }
    report.verdict = found.empty() ? Verdict::not_refuted : Verdict::fails;
    if (opts.count_violations || opts.all_witnesses) {
      report.violation_count = found.size();
    }
    if (opts.all_witnesses) {
      report.witnesses = std::move(found);
    }
    return report;
  }

  std::pair<ElemSet, ElemSet> evaluate_instance(HyperTable const&              t,
                                                LawId                          law,
                                                std::span<std::uint64_t const> tuple) {
    LawInfo const& info = law_info(law);
    if (tuple.size() != info.arity) {
      throw DomainError("law " + std::string(info.name) + " takes "
                        + std::to_string(info.arity) + " values");
    }
    for (auto v : tuple) {
      bool const ok = info.scope == LawScope::element
                          ? v < t.order()
                          : (v != 0 && ElemSet(v).subset_of(t.carrier()));
      if (!ok) {
        throw DomainError("tuple value out of range");
      }
    }
    auto entry = [&t](std::size_t x, std::size_t y) { return t(x, y); };
    return {evaluate_side(info.lhs, tuple, entry),
            evaluate_side(info.rhs, tuple, entry)};
  }

}  // namespace lahyper
