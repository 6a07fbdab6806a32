#include "lahyper/table_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "lahyper/error.hpp"

namespace lahyper {

  namespace {
    bool is_blank(char c) {
      return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f';
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && is_blank(s.front())) {
        s.remove_prefix(1);
      }
      while (!s.empty() && is_blank(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }

    Violation syntax(std::size_t line, std::size_t col, std::string reason) {
      return {ViolationKind::syntax,
              Violation::npos,
              Violation::npos,
              line,
              col,
              std::move(reason)};
    }

    // Splits on runs of blanks, recording 1-based columns.
    std::vector<std::pair<std::string, std::size_t>>
    words(std::string_view s, std::size_t col_base) {
      std::vector<std::pair<std::string, std::size_t>> out;
      std::size_t i = 0;
      while (i < s.size()) {
        while (i < s.size() && is_blank(s[i])) {
          ++i;
        }
        std::size_t const start = i;
        while (i < s.size() && !is_blank(s[i])) {
          ++i;
        }
        if (i > start) {
          out.emplace_back(std::string(s.substr(start, i - start)),
                           col_base + start);
        }
      }
      return out;
    }

    void parse_cells(std::string_view        body,
                     std::size_t             line,
                     std::size_t             col_base,
                     RawRow&                 row,
                     std::vector<Violation>& errors) {
      std::size_t i = 0;
      while (true) {
        while (i < body.size() && is_blank(body[i])) {
          ++i;
        }
        if (i == body.size()) {
          return;
        }
        std::size_t const col = col_base + i;
        if (body[i] != '{') {
          errors.push_back(syntax(line, col, "expected '{' to start a cell"));
          return;
        }
        auto const close = body.find('}', i);
        if (close == std::string_view::npos) {
          errors.push_back(syntax(line, col, "cell is missing its closing '}'"));
          return;
        }
        RawCell cell{{}, line, col};
        auto    inside = body.substr(i + 1, close - i - 1);
        if (inside.find('{') != std::string_view::npos) {
          errors.push_back(syntax(line, col, "nested '{' inside a cell"));
          return;
        }
        if (!trim(inside).empty()) {
          std::size_t start = 0;
          while (true) {
            auto comma  = inside.find(',', start);
            auto member = trim(inside.substr(
                start, comma == std::string_view::npos ? std::string_view::npos
                                                       : comma - start));
            if (member.empty()) {
              errors.push_back(
                  syntax(line, col, "empty name between commas in a cell"));
            } else {
              cell.members.emplace_back(member);
            }
            if (comma == std::string_view::npos) {
              break;
            }
            start = comma + 1;
          }
        }
        row.cells.push_back(std::move(cell));
        i = close + 1;
      }
    }
  }  // namespace

  RawTable parse_raw_table(std::string_view text) {
    RawTable               raw;
    std::vector<Violation> errors;
    bool                   have_header = false;
    std::size_t            line_no     = 0;

    std::size_t start = 0;
    while (start <= text.size()) {
      auto        end  = text.find('\n', start);
      auto        line = text.substr(start,
                              end == std::string_view::npos ? std::string_view::npos
                                                            : end - start);
      ++line_no;
      start = end == std::string_view::npos ? text.size() + 1 : end + 1;

      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      if (trim(line).empty()) {
        continue;
      }
      auto const colon = line.find(':');
      if (colon == std::string_view::npos) {
        errors.push_back(syntax(line_no, 1, "expected '<name>:' at line start"));
        continue;
      }
      auto const label = trim(line.substr(0, colon));
      auto const body  = line.substr(colon + 1);
      if (!have_header) {
        if (label != "elements") {
          errors.push_back(syntax(
              line_no, 1, "the first line must be 'elements: <names>'"));
          break;
        }
        have_header     = true;
        raw.header_line = line_no;
        for (auto& [w, col] : words(body, colon + 2)) {
          raw.names.push_back(std::move(w));
        }
        continue;
      }
      RawRow row{std::string(label), {}, line_no};
      parse_cells(body, line_no, colon + 2, row, errors);
      raw.rows.push_back(std::move(row));
    }
    if (!have_header && errors.empty()) {
      errors.push_back(syntax(line_no, 0, "missing 'elements:' header"));
    }
    if (!errors.empty()) {
      throw TableError(std::move(errors));
    }
    return raw;
  }

  HyperTable parse_table_file(std::string_view text) {
    return validate_table(parse_raw_table(text));
  }

  std::string format_table(HyperTable const& t) {
    std::string out = "elements:";
    for (auto const& name : t.names()) {
      out += ' ' + name;
    }
    out += '\n';
    for (std::size_t r = 0; r < t.order(); ++r) {
      out += t.name(r) + ':';
      for (std::size_t c = 0; c < t.order(); ++c) {
        out += ' ' + format_set(t, t(r, c));
      }
      out += '\n';
    }
    return out;
  }

  HyperTable read_table_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw DomainError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_table_file(buffer.str());
  }

}  // namespace lahyper
