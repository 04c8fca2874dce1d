#include "gyro/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "json.hpp"

namespace gyro::io {

using nlohmann::json;

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) +
                         (column ? ", column " + std::to_string(column) : std::string()) + ": " +
                         message),
      line_(line),
      column_(column) {}

std::vector<std::string> legend_symbols(const FiniteGyrogroup& g) {
  std::vector<std::string> out;
  std::size_t next = 0;  // index into the alphabet without 'I'
  for (const auto& p : g.perms()) {
    if (p.is_identity()) {
      out.emplace_back("I");
      continue;
    }
    if (next < 25) {
      const char c = static_cast<char>('A' + next + (next >= 8 ? 1 : 0));
      out.emplace_back(1, c);
    } else {
      out.push_back("P" + std::to_string(next + 1));
    }
    ++next;
  }
  return out;
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

void emit_grid(std::ostringstream& out, const std::string& corner, std::size_t n,
               std::size_t width, const auto& cell) {
  const std::size_t head = std::max(width, corner.size());
  out << pad(corner, head) << " |";
  for (std::size_t b = 0; b < n; ++b) out << ' ' << pad(std::to_string(b), width);
  out << '\n' << std::string(head + 1, '-') << '+' << std::string(n * (width + 1), '-') << '\n';
  for (std::size_t a = 0; a < n; ++a) {
    out << pad(std::to_string(a), head) << " |";
    for (std::size_t b = 0; b < n; ++b) out << ' ' << pad(cell(a, b), width);
    out << '\n';
  }
}

}  // namespace

std::string emit_tables(const FiniteGyrogroup& g, TableFormat format) {
  const std::size_t n = g.order();
  const auto symbols = legend_symbols(g);
  std::ostringstream out;

  if (format == TableFormat::Csv) {
    out << "order," << n << '\n' << "cayley\n";
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) out << (b ? "," : "") << g.op(a, b);
      out << '\n';
    }
    out << "gyration\n";
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) out << (b ? "," : "") << symbols[g.gyr_index(a, b)];
      out << '\n';
    }
    for (std::size_t k = 0; k < symbols.size(); ++k) {
      out << "perm " << symbols[k] << ':';
      for (Element x : g.perms()[k].mapping()) out << ' ' << x;
      out << '\n';
    }
    return out.str();
  }

  std::size_t width = std::to_string(n - 1).size();
  for (const auto& s : symbols) width = std::max(width, s.size());
  out << "Cayley table, order " << n << '\n';
  emit_grid(out, "+", n, width, [&](std::size_t a, std::size_t b) {
    return std::to_string(g.op(static_cast<Element>(a), static_cast<Element>(b)));
  });
  out << "\nGyration table\n";
  emit_grid(out, "gyr", n, width, [&](std::size_t a, std::size_t b) {
    return symbols[g.gyr_index(static_cast<Element>(a), static_cast<Element>(b))];
  });
  out << '\n';
  for (std::size_t k = 0; k < symbols.size(); ++k)
    out << symbols[k] << " = " << g.perms()[k].cycle_string() << '\n';
  return out.str();
}

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string line(text.substr(pos, end - pos));
    ++number;
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t");
    lines.push_back({number, line.substr(first, last - first + 1)});
  }
  return lines;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, end == std::string_view::npos ? s.npos : end - pos)));
    if (end == std::string_view::npos) return out;
    pos = end + 1;
  }
}

std::optional<std::size_t> parse_uint(std::string_view s) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

class Cursor {
 public:
  explicit Cursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return next_ >= lines_.size(); }
  std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

  const Line& take(const std::string& expecting) {
    if (done()) throw ParseError(last_line() + 1, 0, "unexpected end of input, expected " + expecting);
    return lines_[next_++];
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

}  // namespace

FiniteGyrogroup load_tables(std::string_view text, const LoadOptions& opts) {
  Cursor cur(content_lines(text));

  const Line& header = cur.take("'order,N'");
  const auto head = split(header.text, ',');
  if (head.size() != 2 || head[0] != "order")
    throw ParseError(header.number, 1, "expected 'order,N'");
  const auto order = parse_uint(head[1]);
  if (!order || *order == 0 || *order > 65536)
    throw ParseError(header.number, 2, "order must be an integer in 1..65536");
  const std::size_t n = *order;

  auto expect_keyword = [&](const std::string& word) {
    const Line& l = cur.take("'" + word + "'");
    if (l.text != word) throw ParseError(l.number, 1, "expected '" + word + "'");
  };

  auto take_row = [&](std::size_t r, const std::string& what) {
    const Line& l = cur.take(what + " row " + std::to_string(r));
    auto fields = split(l.text, ',');
    if (fields.size() != n) {
      throw ParseError(l.number, std::min(fields.size(), n) + 1,
                       what + " row " + std::to_string(r) + " has " +
                           std::to_string(fields.size()) + " entries, expected " +
                           std::to_string(n));
    }
    return std::pair<std::size_t, std::vector<std::string>>{l.number, std::move(fields)};
  };

  expect_keyword("cayley");
  std::vector<Element> cayley(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    const auto [number, fields] = take_row(r, "cayley");
    for (std::size_t c = 0; c < n; ++c) {
      const auto v = parse_uint(fields[c]);
      if (!v || *v >= n)
        throw ParseError(number, c + 1, "cayley entry '" + fields[c] + "' is not an element");
      cayley[r * n + c] = static_cast<Element>(*v);
    }
  }

  expect_keyword("gyration");
  std::vector<std::string> gyr_symbols(n * n);
  std::vector<std::size_t> gyr_lines(n);
  for (std::size_t r = 0; r < n; ++r) {
    auto [number, fields] = take_row(r, "gyration");
    gyr_lines[r] = number;
    for (std::size_t c = 0; c < n; ++c) {
      if (fields[c].empty()) throw ParseError(number, c + 1, "empty gyration entry");
      gyr_symbols[r * n + c] = std::move(fields[c]);
    }
  }

  std::map<std::string, GyrIndex> legend;
  std::vector<Permutation> perms;
  while (!cur.done()) {
    const Line& l = cur.take("legend");
    if (l.text.rfind("perm ", 0) != 0)
      throw ParseError(l.number, 1, "expected a legend line 'perm SYMBOL: images...'");
    const auto colon = l.text.find(':');
    if (colon == std::string::npos) throw ParseError(l.number, 0, "legend line is missing ':'");
    const std::string symbol = trim(std::string_view(l.text).substr(5, colon - 5));
    if (symbol.empty() || symbol.find_first_of(" ,") != std::string::npos)
      throw ParseError(l.number, 6, "invalid legend symbol");
    if (legend.contains(symbol))
      throw ParseError(l.number, 6, "legend symbol '" + symbol + "' defined twice");

    std::vector<Element> images;
    std::istringstream in(l.text.substr(colon + 1));
    std::string tok;
    while (in >> tok) {
      const auto v = parse_uint(tok);
      if (!v || *v >= n)
        throw ParseError(l.number, 0, "legend '" + symbol + "' has invalid image '" + tok + "'");
      images.push_back(static_cast<Element>(*v));
    }
    if (images.size() != n)
      throw ParseError(l.number, 0,
                       "legend '" + symbol + "' has " + std::to_string(images.size()) +
                           " images, expected " + std::to_string(n));
    try {
      perms.emplace_back(std::move(images));
    } catch (const std::invalid_argument&) {
      throw ParseError(l.number, 0, "legend '" + symbol + "' is not a permutation");
    }
    legend.emplace(symbol, static_cast<GyrIndex>(perms.size() - 1));
  }

  std::vector<GyrIndex> gyr(n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    const auto it = legend.find(gyr_symbols[k]);
    if (it == legend.end()) {
      throw StructureError("gyration symbol '" + gyr_symbols[k] + "' at line " +
                           std::to_string(gyr_lines[k / n]) + ", column " +
                           std::to_string(k % n + 1) + " is not defined in the legend");
    }
    gyr[k] = it->second;
  }

  FiniteGyrogroup g(n, std::move(cayley), std::move(gyr), std::move(perms));
  if (opts.require_latin) {
    if (const auto defect = find_latin_defect(g))
      throw StructureError("cayley table is not a latin square: " + defect->describe());
  }
  if (const auto e = find_left_identity(g); e && *e != 0) return relabel_identity(g, *e);
  return g;
}

std::string emit_lattice_dot(const SubgyrogroupLattice& lattice) {
  std::ostringstream out;
  out << "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < lattice.nodes.size(); ++i) {
    const auto& h = lattice.nodes[i];
    out << "  n" << i << " [label=\"" << h.label() << " |" << h.order() << "|\"";
    if (!h.is_group) out << ", style=bold";
    out << "];\n";
  }
  for (const auto& [child, parent] : lattice.covers)
    out << "  n" << child << " -> n" << parent << ";\n";
  out << "}\n";
  return out.str();
}

bool ReportDocument::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

std::string ReportDocument::to_json() const {
  json params = {{"order", order}};
  params["n"] = n ? json(*n) : json(nullptr);
  params["m"] = m ? json(*m) : json(nullptr);
  json checks_json = json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"name", c.name},
                           {"status", c.passed ? "pass" : "fail"},
                           {"witness", c.witness},
                           {"sampled", c.sampled}});
  }
  json doc = {{"params", params},
              {"checks", checks_json},
              {"gyrocommutative", gyrocommutative},
              {"all_passed", all_passed()}};
  doc["subgyrogroup_count"] = subgyrogroup_count ? json(*subgyrogroup_count) : json(nullptr);
  doc["gyroauto_order"] = gyroauto_order ? json(*gyroauto_order) : json(nullptr);
  return doc.dump(2) + "\n";
}

ReportDocument ReportDocument::from_json(std::string_view text) {
  const json doc = json::parse(text);
  ReportDocument r;
  const auto& params = doc.at("params");
  r.order = params.at("order").get<std::size_t>();
  if (!params.at("n").is_null()) r.n = params.at("n").get<int>();
  if (!params.at("m").is_null()) r.m = params.at("m").get<std::size_t>();
  for (const auto& c : doc.at("checks")) {
    const auto status = c.at("status").get<std::string>();
    if (status != "pass" && status != "fail")
      throw std::invalid_argument("report: unknown status '" + status + "'");
    r.checks.push_back({c.at("name").get<std::string>(), status == "pass",
                        c.at("witness").get<std::vector<Element>>(), c.at("sampled").get<bool>()});
  }
  r.gyrocommutative = doc.at("gyrocommutative").get<bool>();
  if (!doc.at("subgyrogroup_count").is_null())
    r.subgyrogroup_count = doc.at("subgyrogroup_count").get<std::size_t>();
  if (!doc.at("gyroauto_order").is_null())
    r.gyroauto_order = doc.at("gyroauto_order").get<std::size_t>();
  return r;
}

ReportDocument make_report(const VerificationReport& report, std::size_t order) {
  ReportDocument doc;
  doc.order = order;
  for (const auto& s : report.checks)
    doc.checks.push_back({std::string(check_name(s.check)), s.passed, s.witness, s.sampled});
  doc.gyrocommutative = report.status(Check::Gyrocommutativity).passed;
  return doc;
}

std::string format_report(const ReportDocument& doc) {
  std::ostringstream out;
  out << "order: " << doc.order;
  if (doc.n) out << " (n = " << *doc.n << ", m = " << doc.m.value_or(0) << ")";
  out << '\n';
  for (const auto& c : doc.checks) {
    out << "  " << c.name << ": " << (c.passed ? "pass" : "FAIL");
    if (c.sampled) out << " (sampled)";
    if (!c.passed) {
      out << " witness (";
      for (std::size_t i = 0; i < c.witness.size(); ++i) out << (i ? "," : "") << c.witness[i];
      out << ')';
    }
    out << '\n';
  }
  out << "gyrocommutative: " << (doc.gyrocommutative ? "true" : "false") << '\n';
  out << "subgyrogroups: "
      << (doc.subgyrogroup_count ? std::to_string(*doc.subgyrogroup_count) : "not computed") << '\n';
  out << "gyroautomorphism group order: "
      << (doc.gyroauto_order ? std::to_string(*doc.gyroauto_order) : "not computed") << '\n';
  out << "result: " << (doc.all_passed() ? "all checks pass" : "verification FAILED") << '\n';
  return out.str();
}

}  // namespace gyro::io
