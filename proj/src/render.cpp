#include "pinched/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace pinched {

using nlohmann::json;

json config_json(const PinchConfig& config) {
  return {{"n", config.n()},
          {"d", config.d()},
          {"m", config.m().coords()},
          {"pinch_class", to_string(config.pinch_class())},
          {"N", config.big_n()}};
}

json table_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [cell, v] : table.entries()) {
    entries.push_back({{"i", cell.first},
                       {"s", cell.second},
                       {"degree", cell.second * table.config().d()},
                       {"value", v}});
  }
  json totals = json::array();
  for (int i = 0; i <= table.range().i_max; ++i) totals.push_back(table.total(i));
  return {{"schema_version", kSchemaVersion},
          {"kind", "betti_table"},
          {"config", config_json(table.config())},
          {"field", table.field().str()},
          {"scanned_range", {{"i_max", table.range().i_max}, {"s_max", table.range().s_max}}},
          {"guard_column_zero", table.guard_column_zero()},
          {"totals", totals},
          {"entries", entries}};
}

json classification_json(const ClassificationReport& r) {
  return {{"pdim", r.pdim},
          {"depth", r.depth},
          {"krull_dim", r.krull_dim},
          {"is_cm", r.is_cm},
          {"is_gorenstein", r.is_gorenstein},
          {"linearity_index", r.linearity_index},
          {"observed_regularity", r.observed_regularity}};
}

json expected_json(const ExpectedTable& e) {
  json claims = json::array();
  for (const auto& c : e.claims) {
    json j = {{"i", c.cell.first}, {"s", c.cell.second}, {"label", c.label}};
    switch (c.kind) {
      case Claim::Kind::Equals: j["kind"] = "equals"; j["value"] = c.value; break;
      case Claim::Kind::Zero: j["kind"] = "zero"; break;
      case Claim::Kind::NonZero: j["kind"] = "nonzero"; break;
    }
    claims.push_back(std::move(j));
  }
  json unknown = json::array();
  for (const auto& cell : e.unknown) unknown.push_back({{"i", cell.first}, {"s", cell.second}});
  return {{"source", e.source}, {"claims", claims}, {"unknown", unknown}};
}

json report_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"label", c.label},
                      {"source", c.source},
                      {"judged", c.judged},
                      {"passed", c.passed},
                      {"expected", c.expected},
                      {"actual", c.actual}});
  }
  json out = {{"schema_version", kSchemaVersion},
              {"kind", "verification_report"},
              {"config", config_json(r.config)},
              {"field", r.field.str()},
              {"all_pass", r.all_pass},
              {"checks", checks}};
  if (r.table) out["table"] = table_json(*r.table);
  if (r.classification) out["classification"] = classification_json(*r.classification);
  if (r.witness) {
    out["witness"] = {{"h", r.witness->h.coords()},
                      {"i", r.witness->i},
                      {"dim", r.witness->dim},
                      {"faces", r.witness->faces}};
  }
  return out;
}

json rational_function_json(const RationalFunction& f) {
  auto [num, den] = f.integer_form();
  auto ints = [](const std::vector<mpz_class>& v) {
    json a = json::array();
    for (const auto& c : v) {
      if (c.fits_slong_p()) {
        a.push_back(c.get_si());
      } else {
        a.push_back(c.get_str());
      }
    }
    return a;
  };
  return {{"numerator", ints(num)}, {"denominator", ints(den)}};
}

std::string table_text(const BettiTable& table, const ExpectedTable* expected) {
  const auto& range = table.range();
  std::map<Cell, char> tags;
  if (expected) {
    for (const auto& c : expected->claims) {
      const auto [i, s] = c.cell;
      if (i > range.i_max || s > range.s_max) continue;
      const std::int64_t v = table.at(i, s);
      const bool ok = c.kind == Claim::Kind::Equals   ? v == c.value
                      : c.kind == Claim::Kind::Zero   ? v == 0
                                                      : v != 0;
      char& tag = tags[c.cell];
      if (tag != '!') tag = ok ? '=' : '!';
    }
    for (const auto& cell : expected->unknown) tags.emplace(cell, '?');
  }

  int max_row = 0;
  for (const auto& [cell, v] : table.entries()) {
    if (v != 0 || (tags.count(cell) && tags[cell] != '?')) {
      max_row = std::max(max_row, cell.second - cell.first);
    }
  }

  std::size_t width = 1;
  for (int i = 0; i <= range.i_max; ++i) {
    width = std::max(width, std::to_string(table.total(i)).size());
  }
  auto put = [&](std::ostringstream& os, const std::string& text, char tag) {
    os << ' ' << std::setw(static_cast<int>(width)) << text << tag;
  };

  std::ostringstream os;
  os << table.config().str() << " over " << table.field().str() << ", scanned i <= " << range.i_max
     << ", s <= " << range.s_max << '\n';
  os << std::setw(7) << "";
  for (int i = 0; i <= range.i_max; ++i) put(os, std::to_string(i), ' ');
  os << "\ntotal:";
  os << ' ';
  for (int i = 0; i <= range.i_max; ++i) put(os, std::to_string(table.total(i)), ' ');
  os << '\n';
  for (int r = 0; r <= max_row; ++r) {
    os << std::setw(5) << r << ": ";
    for (int i = 0; i <= range.i_max; ++i) {
      const int s = i + r;
      if (s > range.s_max) {
        put(os, "", ' ');
        continue;
      }
      const std::int64_t v = table.at(i, s);
      auto it = tags.find({i, s});
      put(os, v == 0 ? "." : std::to_string(v), it == tags.end() ? ' ' : it->second);
    }
    os << '\n';
  }
  return os.str();
}

std::string table_csv(const BettiTable& table) {
  std::ostringstream os;
  os << "i,s,degree,row,value\n";
  for (const auto& [cell, v] : table.entries()) {
    os << cell.first << ',' << cell.second << ',' << cell.second * table.config().d() << ','
       << cell.second - cell.first << ',' << v << '\n';
  }
  return os.str();
}

namespace {

std::string status_of(const Check& c) {
  if (!c.judged) return "INFO";
  return c.passed ? "PASS" : "FAIL";
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

std::string report_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "verify " << r.config.str() << " over " << r.field.str() << '\n';
  if (r.table) {
    os << table_text(*r.table, r.expected ? &*r.expected : nullptr);
  }
  if (r.classification) {
    const auto& c = *r.classification;
    os << "pdim " << c.pdim << ", depth " << c.depth << ", dim " << c.krull_dim
       << ", CM " << (c.is_cm ? "yes" : "no") << ", Gorenstein " << (c.is_gorenstein ? "yes" : "no")
       << ", linearity index " << c.linearity_index << ", regularity " << c.observed_regularity
       << '\n';
  }
  std::size_t failed = 0, judged = 0;
  for (const auto& c : r.checks) {
    os << status_of(c) << "  " << c.label << "  [" << c.source << "]  expected " << c.expected
       << ", got " << c.actual << '\n';
    if (c.judged) ++judged;
    if (c.judged && !c.passed) ++failed;
  }
  os << (r.all_pass ? "PASS" : "FAIL") << ": " << judged - failed << "/" << judged
     << " judged checks passed\n";
  return os.str();
}

std::string report_csv(const VerificationReport& r, bool header) {
  std::ostringstream os;
  if (header) os << "config,field,status,label,source,expected,actual\n";
  for (const auto& c : r.checks) {
    os << quoted(r.config.str()) << ',' << r.field.str() << ',' << status_of(c) << ','
       << quoted(c.label) << ',' << quoted(c.source) << ',' << quoted(c.expected) << ','
       << quoted(c.actual) << '\n';
  }
  return os.str();
}

}  // namespace pinched
