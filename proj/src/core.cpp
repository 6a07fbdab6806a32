#include "lahyper/core.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

#include "lahyper/error.hpp"

namespace lahyper {

  char const* to_string(ViolationKind kind) noexcept {
    switch (kind) {
      case ViolationKind::empty_entry:
        return "EmptyEntry";
      case ViolationKind::unknown_element:
        return "UnknownElement";
      case ViolationKind::row_count_mismatch:
        return "RowCountMismatch";
      case ViolationKind::column_count_mismatch:
        return "ColumnCountMismatch";
      case ViolationKind::duplicate_name:
        return "DuplicateName";
      case ViolationKind::invalid_name:
        return "InvalidName";
      case ViolationKind::row_name_mismatch:
        return "RowNameMismatch";
      case ViolationKind::too_many_elements:
        return "TooManyElements";
      case ViolationKind::syntax:
        return "Syntax";
    }
    return "Unknown";
  }

  namespace {
    std::string summarize(std::vector<Violation> const& violations) {
      std::string out = "invalid table";
      for (auto const& v : violations) {
        out += "\n  ";
        if (v.line != 0) {
          out += "line " + std::to_string(v.line);
          if (v.line_col != 0) {
            out += ":" + std::to_string(v.line_col);
          }
          out += ": ";
        }
        out += to_string(v.kind);
        if (v.row != Violation::npos) {
          out += " at row " + std::to_string(v.row);
          if (v.column != Violation::npos) {
            out += ", column " + std::to_string(v.column);
          }
        }
        out += ": " + v.reason;
      }
      return out;
    }

    void check_names(std::vector<std::string> const& names,
                     std::size_t                     line,
                     std::vector<Violation>&         out) {
      if (names.empty()) {
        out.push_back({ViolationKind::too_many_elements,
                       Violation::npos,
                       Violation::npos,
                       line,
                       0,
                       "a hypergroupoid needs at least one element"});
      }
      if (names.size() > HyperTable::max_order) {
        out.push_back({ViolationKind::too_many_elements,
                       Violation::npos,
                       Violation::npos,
                       line,
                       0,
                       std::to_string(names.size())
                           + " elements given, at most 64 supported"});
      }
      std::unordered_map<std::string, std::size_t> seen;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (!is_valid_element_name(names[i])) {
          out.push_back({ViolationKind::invalid_name,
                         Violation::npos,
                         i,
                         line,
                         0,
                         "invalid element name '" + names[i] + "'"});
        }
        auto [it, fresh] = seen.emplace(names[i], i);
        if (!fresh) {
          out.push_back({ViolationKind::duplicate_name,
                         Violation::npos,
                         i,
                         line,
                         0,
                         "element '" + names[i] + "' already declared at "
                             "position " + std::to_string(it->second)});
        }
      }
    }
  }  // namespace

  TableError::TableError(std::vector<Violation> violations)
      : std::runtime_error(summarize(violations)),
        violations_(std::move(violations)) {}

  bool is_valid_element_name(std::string_view name) noexcept {
    if (name.empty()) {
      return false;
    }
    return std::none_of(name.begin(), name.end(), [](char c) {
      switch (c) {
        case ' ':
        case '\t':
        case '\n':
        case '\r':
        case '\v':
        case '\f':
        case '{':
        case '}':
        case ',':
        case '(':
        case ')':
        case '*':
        case '#':
        case ':':
          return true;
        default:
          return false;
      }
    });
  }

  std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                             : "e" + std::to_string(i));
    }
    return names;
  }

  HyperTable::HyperTable(std::vector<std::string> names,
                         std::vector<ElemSet>     entries)
      : names_(std::move(names)), entries_(std::move(entries)) {
    std::vector<Violation> violations;
    check_names(names_, 0, violations);
    std::size_t const n = names_.size();
    if (entries_.size() != n * n) {
      violations.push_back({ViolationKind::column_count_mismatch,
                            Violation::npos,
                            Violation::npos,
                            0,
                            0,
                            "expected " + std::to_string(n * n)
                                + " entries, got "
                                + std::to_string(entries_.size())});
    } else if (n <= max_order) {
      ElemSet const carrier = ElemSet::full(n);
      for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].empty()) {
          violations.push_back({ViolationKind::empty_entry,
                                i / n,
                                i % n,
                                0,
                                0,
                                "entry is empty"});
        } else if (!entries_[i].subset_of(carrier)) {
          violations.push_back({ViolationKind::unknown_element,
                                i / n,
                                i % n,
                                0,
                                0,
                                "entry names an element outside the "
                                "carrier"});
        }
      }
    }
    if (!violations.empty()) {
      throw TableError(std::move(violations));
    }
  }

  HyperTable HyperTable::with_default_names(std::size_t          n,
                                            std::vector<ElemSet> entries) {
    return HyperTable(default_names(n), std::move(entries));
  }

  std::optional<std::size_t> HyperTable::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - names_.begin());
  }

  ElemSet hyper(HyperTable const& t, std::size_t a, std::size_t b) {
    if (a >= t.order() || b >= t.order()) {
      throw DomainError("element index out of range for a table of order "
                        + std::to_string(t.order()));
    }
    return t(a, b);
  }

  ElemSet set_product(HyperTable const& t, ElemSet lhs, ElemSet rhs) {
    if (lhs.empty() || rhs.empty()) {
      throw EmptyOperand("the set product is defined on nonempty subsets only");
    }
    if (!lhs.subset_of(t.carrier()) || !rhs.subset_of(t.carrier())) {
      throw DomainError("operand is not a subset of the carrier");
    }
    ElemSet out;
    for (auto a : lhs) {
      for (auto b : rhs) {
        out |= t(a, b);
      }
    }
    return out;
  }

  HyperTable validate_table(RawTable const& raw) {
    std::vector<Violation> violations;
    check_names(raw.names, raw.header_line, violations);
    std::size_t const n = raw.names.size();

    std::unordered_map<std::string_view, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) {
      index.emplace(raw.names[i], i);
    }

    if (raw.rows.size() != n) {
      violations.push_back(
          {ViolationKind::row_count_mismatch,
           Violation::npos,
           Violation::npos,
           raw.rows.size() > n ? raw.rows[n].line
                               : (raw.rows.empty() ? raw.header_line
                                                   : raw.rows.back().line),
           0,
           "header declares " + std::to_string(n) + " elements but "
               + std::to_string(raw.rows.size()) + " rows are given"});
    }

    std::vector<ElemSet> entries(n * n);
    for (std::size_t r = 0; r < raw.rows.size() && r < n; ++r) {
      auto const& row = raw.rows[r];
      if (row.name != raw.names[r]) {
        violations.push_back({ViolationKind::row_name_mismatch,
                              r,
                              Violation::npos,
                              row.line,
                              1,
                              "row " + std::to_string(r) + " is labelled '"
                                  + row.name + "', expected '"
                                  + raw.names[r] + "'"});
      }
      if (row.cells.size() != n) {
        violations.push_back({ViolationKind::column_count_mismatch,
                              r,
                              Violation::npos,
                              row.line,
                              0,
                              "row has " + std::to_string(row.cells.size())
                                  + " cells, expected " + std::to_string(n)});
      }
      for (std::size_t c = 0; c < row.cells.size() && c < n; ++c) {
        auto const& cell = row.cells[c];
        if (cell.members.empty()) {
          violations.push_back({ViolationKind::empty_entry,
                                r,
                                c,
                                cell.line,
                                cell.col,
                                "cell is empty; every entry must be a "
                                "nonempty subset"});
          continue;
        }
        ElemSet value;
        for (auto const& member : cell.members) {
          auto it = index.find(member);
          if (it == index.end()) {
            violations.push_back({ViolationKind::unknown_element,
                                  r,
                                  c,
                                  cell.line,
                                  cell.col,
                                  "'" + member
                                      + "' is not declared in the header"});
          } else {
            value |= ElemSet::singleton(it->second);
          }
        }
        entries[r * n + c] = value;
      }
    }

    if (!violations.empty()) {
      throw TableError(std::move(violations));
    }
    return HyperTable(raw.names, std::move(entries));
  }

  std::string format_set(std::span<std::string const> names, ElemSet s) {
    std::string out = "{";
    bool        first = true;
    for (auto i : s) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += i < names.size() ? names[i] : "#" + std::to_string(i);
    }
    out += '}';
    return out;
  }

  std::string format_set(HyperTable const& t, ElemSet s) {
    return format_set(std::span<std::string const>(t.names()), s);
  }

}  // namespace lahyper
