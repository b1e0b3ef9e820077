#include "mspin/cli.hpp"

#include <cmath>
#include <fstream>
#include <future>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mspin/arf_calculus.hpp"
#include "mspin/invariants.hpp"
#include "mspin/level_lemmas.hpp"
#include "mspin/orbits.hpp"
#include "mspin/report.hpp"
#include "mspin/sequential.hpp"

namespace mspin {

namespace {

using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

template <class T>
std::vector<T> parse_list(const std::string& text, char sep = ',') {
  std::vector<T> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) {
    std::istringstream cell(item);
    T v{};
    if (!(cell >> v) || !(cell >> std::ws).eof())
      throw Error(ErrorCode::ParseError, "cannot parse '" + item + "' in '" + text + "'");
    out.push_back(v);
  }
  return out;
}

ordered_json signature_json(const SurfaceSignature& sig) {
  return {{"g", sig.genus}, {"l_h", sig.holes}, {"l_p", sig.punctures}};
}

ordered_json type_json(const ArfType& t) {
  return {{"g", t.genus}, {"delta", t.delta}, {"n_h", t.n_h}, {"n_p", t.n_p}};
}

std::string joined(std::span<const Residue> xs, char sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? std::string(1, sep) : "") + std::to_string(xs[i]);
  return s;
}

TwistKind parse_kind(const std::string& name) {
  for (auto k : {TwistKind::T1a, TwistKind::T1b, TwistKind::T2, TwistKind::T3, TwistKind::T4, TwistKind::T5a,
                 TwistKind::T5b, TwistKind::HoleSwap, TwistKind::PunctureSwap})
    if (to_string(k) == name) return k;
  throw Error(ErrorCode::ParseError, "unknown twist kind '" + name + "'");
}

struct Options {
  std::string m = "";
  std::optional<int> genus, holes, punctures;
  std::string format = "json";
  std::uint64_t seed = 0;
  std::uint64_t cap = 10'000'000;
  std::string out_file;
  std::string grid = "default";
  std::string values;
  std::string levels;
  std::string params;
  std::string elements;
  std::string exclude;
  std::size_t samples = 1000;

  SurfaceSignature signature() const {
    if (!genus || !holes || !punctures)
      throw Error(ErrorCode::InvalidSignature, "--genus, --holes and --punctures are required");
    return {*genus, *holes, *punctures};
  }

  int modulus() const {
    const auto ms = parse_list<int>(m);
    if (ms.size() != 1) throw Error(ErrorCode::InvalidModulus, "exactly one --m value is required");
    return Modulus(ms[0]).value();
  }

  OrbitOptions orbit_options() const {
    OrbitOptions o;
    o.cap = cap;
    for (const auto& k : parse_list<std::string>(exclude)) o.excluded.push_back(parse_kind(k));
    return o;
  }
};

struct Outcome {
  int code = kOk;
  std::string data;
};

Outcome cmd_count(const Options& o) {
  const auto sig = o.signature();
  const int m = o.modulus();
  const auto count = arf_count(sig, Modulus(m));
  if (parse_format(o.format) == Format::Csv) {
    std::ostringstream s;
    s << "g,l_h,l_p,m,count\n" << sig.genus << ',' << sig.holes << ',' << sig.punctures << ',' << m << ',' << count << '\n';
    return {kOk, s.str()};
  }
  ordered_json j{{"signature", signature_json(sig)}, {"m", m}, {"count", count}};
  return {kOk, j.dump(2) + "\n"};
}

Outcome cmd_enumerate(const Options& o) {
  const auto sig = o.signature();
  const int m = o.modulus();
  require_valid(sig);
  if (arf_count(sig, Modulus(m)) > o.cap) throw Error(ErrorCode::StateSpaceTooLarge, "enumeration exceeds --cap");
  const auto arfs = enumerate_arfs(m, sig);
  if (parse_format(o.format) == Format::Csv) {
    std::string s = "values\n";
    for (const auto& a : arfs) s += joined(a.flatten(), ';') + "\n";
    return {kOk, s};
  }
  ordered_json values = ordered_json::array();
  for (const auto& a : arfs) values.push_back(a.flatten());
  ordered_json j{{"signature", signature_json(sig)}, {"m", m}, {"count", arfs.size()}, {"values", values}};
  return {kOk, j.dump(2) + "\n"};
}

Outcome cmd_types(const Options& o) {
  const auto sig = o.signature();
  const int m = o.modulus();
  require_valid(sig);
  const auto types = enumerate_realizable_types(sig, m);
  if (parse_format(o.format) == Format::Csv) {
    std::ostringstream s;
    s << "g,delta";
    for (int j = 0; j < m; ++j) s << ",n_h" << j;
    for (int j = 0; j < m; ++j) s << ",n_p" << j;
    s << '\n';
    for (const auto& t : types) {
      s << t.genus << ',' << t.delta;
      for (int c : t.n_h) s << ',' << c;
      for (int c : t.n_p) s << ',' << c;
      s << '\n';
    }
    return {kOk, s.str()};
  }
  ordered_json list = ordered_json::array();
  for (const auto& t : types) list.push_back(type_json(t));
  ordered_json j{{"signature", signature_json(sig)}, {"m", m}, {"types", list}};
  return {kOk, j.dump(2) + "\n"};
}

Outcome cmd_census(const Options& o) {
  const auto report = component_census(o.signature(), o.modulus(), o.orbit_options());
  return {report.checks.all() ? kOk : kFalse, emit_report(report, parse_format(o.format))};
}

Outcome cmd_verify(const Options& o, std::ostream& err) {
  const Format format = parse_format(o.format);
  auto ms = parse_list<int>(o.m.empty() ? "2,3,4" : o.m);
  for (int m : ms) (void)Modulus(m);
  std::vector<SurfaceSignature> sigs;
  if (o.genus || o.holes || o.punctures) {
    sigs.push_back(o.signature());
  } else if (o.grid == "default") {
    sigs = default_grid();
  } else {
    throw Error(ErrorCode::ParseError, "unknown grid '" + o.grid + "'");
  }
  const OrbitOptions options = o.orbit_options();

  struct Cell {
    SurfaceSignature sig;
    int m;
    std::future<Verification> result;
  };
  std::vector<Cell> cells;
  for (int m : ms)
    for (const auto& sig : sigs)
      cells.push_back({sig, m, std::async(std::launch::async, [=] { return verify_classification(sig, m, options); })});

  bool all_ok = true;
  ordered_json rows = ordered_json::array();
  std::string csv = "g,l_h,l_p,m,ok\n";
  for (auto& c : cells) {
    const Verification v = c.result.get();
    all_ok = all_ok && v.ok;
    for (const auto& d : v.diagnostics) err << c.sig.to_string() << " m=" << c.m << ": " << d << '\n';
    rows.push_back({{"signature", signature_json(c.sig)}, {"m", c.m}, {"ok", v.ok}, {"diagnostics", v.diagnostics}});
    csv += std::to_string(c.sig.genus) + ',' + std::to_string(c.sig.holes) + ',' + std::to_string(c.sig.punctures) +
           ',' + std::to_string(c.m) + ',' + (v.ok ? "true" : "false") + '\n';
  }
  ordered_json j{{"ok", all_ok}, {"cells", rows}};
  return {all_ok ? kOk : kFalse, format == Format::Csv ? csv : j.dump(2) + "\n"};
}

ArfBasisValues values_arg(const Options& o) {
  if (o.values.empty()) throw Error(ErrorCode::ParseError, "--values is required");
  return new_arf(o.modulus(), o.signature(), parse_list<long long>(o.values));
}

Outcome cmd_normalize(const Options& o) {
  const auto arf = values_arg(o);
  const NormalForm nf = normalize(arf);
  std::vector<std::string> word;
  for (const auto& t : nf.word) word.push_back(t.to_string());
  if (parse_format(o.format) == Format::Csv) {
    std::string s = "input,normal_form,word\n" + joined(arf.flatten(), ';') + "," + joined(nf.values.flatten(), ';') + ",";
    for (std::size_t i = 0; i < word.size(); ++i) s += (i ? " " : "") + word[i];
    return {kOk, s + "\n"};
  }
  ordered_json j{{"signature", signature_json(arf.sig)}, {"m", arf.m},       {"input", arf.flatten()},
                 {"normal_form", nf.values.flatten()},  {"type", type_json(type_of(arf))}, {"word", word}};
  return {kOk, j.dump(2) + "\n"};
}

Outcome cmd_delta(const Options& o) {
  const auto arf = values_arg(o);
  const int delta = arf_invariant_delta(arf);
  if (parse_format(o.format) == Format::Csv) return {kOk, "delta\n" + std::to_string(delta) + "\n"};
  ordered_json j{{"signature", signature_json(arf.sig)}, {"m", arf.m}, {"input", arf.flatten()},
                 {"delta", delta}, {"type", type_json(type_of(arf))}};
  return {kOk, j.dump(2) + "\n"};
}

Outcome cmd_level_lemmas(const Options& o) {
  std::vector<std::future<RegimeResult>> futures;
  for (Regime r : kAllRegimes)
    futures.push_back(std::async(std::launch::async, [=] { return compare_regime(r, o.samples, o.seed); }));
  bool all_ok = true;
  ordered_json rows = ordered_json::array();
  std::string csv = "regime,expected_jump,samples,agreements,chart_failures,lemma_mismatches,ok\n";
  for (auto& f : futures) {
    const RegimeResult r = f.get();
    all_ok = all_ok && r.ok();
    rows.push_back({{"regime", to_string(r.regime)},
                    {"expected_jump", expected_jump(r.regime)},
                    {"samples", r.samples},
                    {"agreements", r.agreements},
                    {"chart_failures", r.chart_failures},
                    {"lemma_mismatches", r.lemma_mismatches},
                    {"ok", r.ok()}});
    csv += std::string(to_string(r.regime)) + ',' + std::to_string(expected_jump(r.regime)) + ',' +
           std::to_string(r.samples) + ',' + std::to_string(r.agreements) + ',' + std::to_string(r.chart_failures) +
           ',' + std::to_string(r.lemma_mismatches) + ',' + (r.ok() ? "true" : "false") + '\n';
  }
  ordered_json j{{"seed", o.seed}, {"ok", all_ok}, {"regimes", rows}};
  return {all_ok ? kOk : kFalse, parse_format(o.format) == Format::Csv ? csv : j.dump(2) + "\n"};
}

std::vector<MoebiusElement> parse_elements(const std::string& text) {
  std::vector<MoebiusElement> out;
  for (const auto& group : parse_list<std::string>(text, ';')) {
    const auto e = parse_list<double>(group);
    if (e.size() != 4) throw Error(ErrorCode::ParseError, "each element needs four entries a,b,c,d");
    out.emplace_back(e[0], e[1], e[2], e[3]);
  }
  return out;
}

ordered_json elements_json(const std::vector<MoebiusElement>& xs) {
  ordered_json list = ordered_json::array();
  for (const auto& g : xs) list.push_back({g.a(), g.b(), g.c(), g.d()});
  return list;
}

Outcome cmd_check_sequential(const Options& o) {
  const auto sig = o.signature();
  std::vector<MoebiusElement> elements;
  if (!o.elements.empty()) {
    elements = parse_elements(o.elements);
  } else {
    elements = build_sequential_set(sig, parse_list<double>(o.params)).elements;
  }
  const bool ok = is_sequential_set(elements, sig);
  ordered_json j{{"signature", signature_json(sig)}, {"sequential", ok}, {"elements", elements_json(elements)}};
  if (sig.genus == 1 && elements.size() >= 2) j["commutator_trace"] = commutator_trace(elements[0], elements[1]);
  if (parse_format(o.format) == Format::Csv)
    return {ok ? kOk : kFalse, "g,l_h,l_p,sequential\n" + std::to_string(sig.genus) + ',' + std::to_string(sig.holes) +
                                   ',' + std::to_string(sig.punctures) + ',' + (ok ? "true" : "false") + '\n'};
  return {ok ? kOk : kFalse, j.dump(2) + "\n"};
}

Outcome cmd_check_lift(const Options& o) {
  const auto sig = o.signature();
  const int m = o.modulus();
  const SequentialSet set = build_sequential_set(sig, parse_list<double>(o.params));
  auto levels = parse_list<long>(o.levels);
  if (levels.empty()) levels.assign(set.elements.size(), 0);
  const LiftCheck c = check_lift_relation(set, levels, m);
  const bool ok = c.winding_verdict && c.agree();
  if (parse_format(o.format) == Format::Csv) {
    std::ostringstream s;
    s << "winding,winding_verdict,closed_form_verdict\n"
      << c.winding << ',' << std::boolalpha << c.winding_verdict << ',' << c.closed_form_verdict << '\n';
    return {ok ? kOk : kFalse, s.str()};
  }
  ordered_json j{{"signature", signature_json(sig)}, {"m", m},
                 {"levels", levels},                 {"winding", c.winding},
                 {"lifts", c.winding_verdict},       {"closed_form", c.closed_form_verdict},
                 {"agree", c.agree()}};
  return {ok ? kOk : kFalse, j.dump(2) + "\n"};
}

}  // namespace

std::vector<SurfaceSignature> default_grid() {
  return {{0, 0, 3}, {0, 1, 2}, {0, 2, 1}, {0, 3, 0}, {1, 1, 0},
          {1, 0, 1}, {1, 1, 1}, {2, 0, 0}, {2, 1, 0}, {2, 0, 1}};
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"m-Arf functions and m-spin structures toolkit", "mspin"};
  app.require_subcommand(1);
  Options o;

  auto add_signature = [&](CLI::App* sub) {
    sub->add_option("--m", o.m, "modulus (verify: comma-separated list)");
    sub->add_option("--genus", o.genus, "genus g");
    sub->add_option("--holes", o.holes, "number of holes l_h");
    sub->add_option("--punctures", o.punctures, "number of punctures l_p");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--seed", o.seed, "random seed");
    sub->add_option("--cap", o.cap, "largest admissible state space");
    sub->add_option("--out", o.out_file, "write data to FILE instead of stdout");
  };
  auto add = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_signature(sub);
    add_common(sub);
    return sub;
  };

  add("count", "number of m-Arf functions");
  add("enumerate", "all m-Arf functions in lexicographic order");
  add("types", "realisable types");
  add("census", "orbit census")->add_option("--exclude", o.exclude, "comma-separated twist kinds to drop");
  auto* verify = add("verify", "verify the classification over a grid");
  verify->add_option("--grid", o.grid, "grid name");
  verify->add_option("--exclude", o.exclude, "comma-separated twist kinds to drop");
  add("normalize", "normal form and twist word")->add_option("--values", o.values, "flat value tuple")->required();
  add("delta", "Arf invariant")->add_option("--values", o.values, "flat value tuple")->required();
  add("verify-level-lemmas", "closed-form level jumps vs path lifting")
      ->add_option("--samples", o.samples, "samples per regime");
  auto* seq = add("check-sequential", "check a sequential set");
  seq->add_option("--params", o.params, "family parameters");
  seq->add_option("--elements", o.elements, "explicit elements a,b,c,d;a,b,c,d;...");
  auto* lift = add("check-lift", "relator winding of lifted generators");
  lift->add_option("--params", o.params, "family parameters");
  lift->add_option("--levels", o.levels, "one level per generator");

  std::vector<const char*> argv{"mspin"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  Outcome outcome;
  try {
    if (name == "count") outcome = cmd_count(o);
    else if (name == "enumerate") outcome = cmd_enumerate(o);
    else if (name == "types") outcome = cmd_types(o);
    else if (name == "census") outcome = cmd_census(o);
    else if (name == "verify") outcome = cmd_verify(o, err);
    else if (name == "normalize") outcome = cmd_normalize(o);
    else if (name == "delta") outcome = cmd_delta(o);
    else if (name == "verify-level-lemmas") outcome = cmd_level_lemmas(o);
    else if (name == "check-sequential") outcome = cmd_check_sequential(o);
    else outcome = cmd_check_lift(o);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  if (o.out_file.empty()) {
    out << outcome.data;
  } else {
    std::ofstream file(o.out_file);
    if (!(file << outcome.data)) {
      err << "cannot write " << o.out_file << '\n';
      return kUsage;
    }
  }
  return outcome.code;
}

}  // namespace mspin
