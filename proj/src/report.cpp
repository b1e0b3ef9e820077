#include "mspin/report.hpp"

#include <sstream>
#include <vector>

#include "json.hpp"
#include "mspin/invariants.hpp"

namespace mspin {

namespace {

using nlohmann::ordered_json;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

long long parse_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw Error(ErrorCode::ParseError, "trailing characters in '" + s + "'");
    return v;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "not an integer: '" + s + "'");
  }
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw Error(ErrorCode::ParseError, "unknown format '" + std::string(name) + "'");
}

std::string census_to_json(const CensusReport& report) {
  ordered_json j;
  j["signature"] = {{"g", report.sig.genus}, {"l_h", report.sig.holes}, {"l_p", report.sig.punctures}};
  j["m"] = report.m;
  j["total"] = report.total;
  j["orbits"] = ordered_json::array();
  for (const auto& o : report.orbits) {
    ordered_json row;
    row["type"] = {{"g", o.type.genus}, {"delta", o.type.delta}, {"n_h", o.type.n_h}, {"n_p", o.type.n_p}};
    row["size"] = o.size;
    row["representative"] = o.representative.flatten();
    j["orbits"].push_back(row);
  }
  j["checks"] = {{"partition", report.checks.partition},
                 {"soundness", report.checks.soundness},
                 {"completeness", report.checks.completeness}};
  return j.dump(2) + "\n";
}

std::string census_to_csv(const CensusReport& report) {
  std::ostringstream out;
  out << "g,l_h,l_p,m,delta";
  for (int j = 0; j < report.m; ++j) out << ",n_h" << j;
  for (int j = 0; j < report.m; ++j) out << ",n_p" << j;
  out << ",size,representative\n";
  for (const auto& o : report.orbits) {
    out << report.sig.genus << ',' << report.sig.holes << ',' << report.sig.punctures << ',' << report.m << ','
        << o.type.delta;
    for (int c : o.type.n_h) out << ',' << c;
    for (int c : o.type.n_p) out << ',' << c;
    out << ',' << o.size << ',';
    const auto flat = o.representative.flatten();
    for (std::size_t i = 0; i < flat.size(); ++i) out << (i ? ";" : "") << flat[i];
    out << '\n';
  }
  return out.str();
}

std::string emit_report(const CensusReport& report, Format format) {
  return format == Format::Json ? census_to_json(report) : census_to_csv(report);
}

CensusReport census_from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    CensusReport r;
    r.sig = {j.at("signature").at("g").get<int>(), j.at("signature").at("l_h").get<int>(),
             j.at("signature").at("l_p").get<int>()};
    r.m = j.at("m").get<int>();
    r.total = j.at("total").get<std::uint64_t>();
    for (const auto& row : j.at("orbits")) {
      OrbitSummary o;
      const auto& t = row.at("type");
      o.type = {t.at("g").get<int>(), t.at("delta").get<int>(), t.at("n_h").get<std::vector<int>>(),
                t.at("n_p").get<std::vector<int>>()};
      o.size = row.at("size").get<std::uint64_t>();
      o.representative = new_arf(r.m, r.sig, row.at("representative").get<std::vector<long long>>());
      r.orbits.push_back(std::move(o));
    }
    const auto& c = j.at("checks");
    r.checks = {c.at("partition").get<bool>(), c.at("soundness").get<bool>(), c.at("completeness").get<bool>()};
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

CensusReport census_from_csv(const std::string& text) {
  auto lines = split(text, '\n');
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 2) throw Error(ErrorCode::ParseError, "CSV census needs a header and at least one row");
  CensusReport r;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const auto cells = split(lines[li], ',');
    if (cells.size() < 7) throw Error(ErrorCode::ParseError, "short CSV row " + std::to_string(li));
    const SurfaceSignature sig{static_cast<int>(parse_int(cells[0])), static_cast<int>(parse_int(cells[1])),
                               static_cast<int>(parse_int(cells[2]))};
    const int m = static_cast<int>(parse_int(cells[3]));
    if (m < 2 || cells.size() != static_cast<std::size_t>(7 + 2 * m))
      throw Error(ErrorCode::ParseError, "CSV row " + std::to_string(li) + " has the wrong number of columns");
    if (li == 1) {
      r.sig = sig;
      r.m = m;
    } else if (sig != r.sig || m != r.m) {
      throw Error(ErrorCode::ParseError, "CSV rows mix signatures or moduli");
    }
    OrbitSummary o;
    o.type.genus = sig.genus;
    o.type.delta = static_cast<int>(parse_int(cells[4]));
    for (int j = 0; j < m; ++j) o.type.n_h.push_back(static_cast<int>(parse_int(cells[5 + j])));
    for (int j = 0; j < m; ++j) o.type.n_p.push_back(static_cast<int>(parse_int(cells[5 + m + j])));
    o.size = static_cast<std::uint64_t>(parse_int(cells[5 + 2 * m]));
    std::vector<long long> flat;
    for (const auto& v : split(cells[6 + 2 * m], ';')) flat.push_back(parse_int(v));
    o.representative = new_arf(m, sig, flat);
    r.orbits.push_back(std::move(o));
  }
  r.total = arf_count(r.sig, Modulus(r.m));
  r.checks = recheck_rows(r.sig, r.m, r.orbits);
  return r;
}

}  // namespace mspin
