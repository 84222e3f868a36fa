// indexsum: command-line front end.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 sweep found a
// violated bound.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "indexsum/artin_schreier.hpp"
#include "indexsum/bounds.hpp"
#include "indexsum/charsum.hpp"
#include "indexsum/cyclic_codes.hpp"
#include "indexsum/error.hpp"
#include "indexsum/index_form.hpp"
#include "indexsum/json_io.hpp"
#include "indexsum/splitmix.hpp"
#include "indexsum/sweep.hpp"

using namespace indexsum;
using nlohmann::json;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolated = 3;

struct Globals {
  bool json_out = false;
  unsigned threads = 1;
  std::string field;
};

void print_human(std::ostream& os, const json& j, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object() && !it->empty()) {
      os << pad << it.key() << ":\n";
      print_human(os, *it, indent + 2);
    } else if (it->is_string()) {
      os << pad << it.key() << ": " << it->get<std::string>() << '\n';
    } else {
      os << pad << it.key() << ": " << it->dump() << '\n';
    }
  }
}

void emit(const Globals& g, const json& j) {
  if (g.json_out) {
    std::cout << j.dump(2) << '\n';
  } else {
    print_human(std::cout, j);
  }
}

FiniteField need_field(const Globals& g) {
  if (g.field.empty()) throw CLI::RequiredError("--field");
  return parse_field(g.field);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, sep);) {
    if (!part.empty()) out.push_back(part);
  }
  return out;
}

json charsum_json(const CyclotomicValue& v) {
  const Magnitude mag = cv_abs(v);
  return {{"sum", to_json(v)}, {"magnitude", mag.value}, {"error", mag.error}};
}

std::string join_elements(const FiniteField& F, const std::vector<FieldElement>& a) {
  std::string out;
  for (std::size_t i = 0; i < a.size(); ++i) out += (i ? ";" : "") + format_element(F, a[i]);
  return out;
}

int run_code(const Globals& g, std::uint64_t q, unsigned m, std::uint64_t N, const std::string& J_text,
             const std::string& a_text, bool min_weight, bool verify, const std::string& out_path, std::uint64_t budget,
             std::uint64_t seed) {
  std::vector<std::uint64_t> J;
  for (const std::string& part : split(J_text, ',')) J.push_back(std::stoull(part));
  const CodeSpec code = make_code(q, m, N, J);
  const FiniteField& E = *code.ctx->ext;
  json out{{"N", code.N}, {"k", code.k}, {"u", code.u()}, {"J", code.J}, {"beta", format_element(E, code.beta)}};

  auto record = [&](const std::vector<FieldElement>& a, std::ostream* csv, bool& all_in) {
    const CodewordRecord rec = trace_codeword(code, a);
    json row{{"a", join_elements(E, a)}, {"weight", rec.weight}, {"weight_via_Ek", weight_via_Ek(code, a)}};
    std::string lo, hi, in;
    if (verify && rec.weight > 0) {
      const CodeWeightReport rep = code_weight_report(code, a);
      const bool inside = rep.report.verdict != Verdict::Violated;
      all_in = all_in && inside;
      row["window"] = {rep.window_lo, rep.window_hi};
      row["report"] = to_json(rep.report);
      std::ostringstream l, h;
      l << rep.window_lo;
      h << rep.window_hi;
      lo = l.str();
      hi = h.str();
      in = inside ? "1" : "0";
    }
    if (csv) *csv << '"' << row["a"].get<std::string>() << "\"," << rec.weight << ',' << lo << ',' << hi << ',' << in << '\n';
    return row;
  };

  std::ofstream csv_file;
  std::ostream* csv = nullptr;
  if (!out_path.empty()) {
    csv_file.open(out_path);
    if (!csv_file) throw Error(ErrorCode::ConfigError, "cannot write " + out_path);
    csv_file << "a,weight,window_lo,window_hi,in_window\n";
    csv = &csv_file;
  }

  bool all_in = true;
  if (!a_text.empty()) {
    std::vector<FieldElement> a;
    for (const std::string& part : split(a_text, ';')) a.push_back(parse_element(E, part));
    out["codeword"] = record(a, csv, all_in);
  } else if (csv || verify) {
    std::uint64_t total = 1;
    bool fits = true;
    for (std::size_t i = 0; i < code.u() && fits; ++i) {
      if (total > budget / E.q()) fits = false;
      total *= E.q();
    }
    std::vector<FieldElement> a(code.u());
    std::uint64_t count = 0;
    SplitMix64 rng(seed);
    const std::uint64_t draws = fits ? total : budget;
    for (std::uint64_t idx = fits ? 1 : 0; idx < draws; ++idx) {
      std::uint64_t rest = idx;
      for (auto& ai : a) {
        if (fits) {
          ai = FieldElement{static_cast<std::uint32_t>(rest % E.q())};
          rest /= E.q();
        } else {
          ai = FieldElement{static_cast<std::uint32_t>(rng.below(E.q()))};
        }
      }
      record(a, csv, all_in);
      ++count;
    }
    out["codewords_examined"] = count;
    out["exhaustive"] = fits;
  }
  if (verify) out["all_in_window"] = all_in;

  if (min_weight) {
    const MinWeightResult res = min_weight_search(code, budget, seed);
    out["min_weight"] = res.min_weight ? json(*res.min_weight) : json(nullptr);
    out["argmin"] = join_elements(E, res.argmin);
    out["min_weight_exhaustive"] = res.exhaustive;
    out["distinct_words"] = res.distinct_words;
    try {
      const WeightFloor wf = min_weight_floor(code);
      out["floor"] = {{"value", wf.value()},
                      {"constant", {wf.constant.numerator(), wf.constant.denominator()}},
                      {"sqrt_coeff", {wf.sqrt_coeff.numerator(), wf.sqrt_coeff.denominator()}},
                      {"radicand", wf.radicand},
                      {"r", wf.r},
                      {"ell", wf.ell}};
      if (res.min_weight) out["floor_holds"] = wf.at_most(*res.min_weight);
    } catch (const Error& e) {
      out["floor"] = nullptr;
      out["floor_reason"] = e.what();
    }
  }
  emit(g, out);
  return verify && !all_in ? kExitViolated : 0;
}

int run_sweep(const Globals& g, CampaignConfig cfg) {
  if (g.threads > 1) cfg.threads = g.threads;
  const CampaignReport rep = run_campaign(cfg);
  if (!cfg.out.empty()) {
    std::ofstream os(cfg.out);
    if (!os) throw Error(ErrorCode::ConfigError, "cannot write " + cfg.out);
    write_csv(os, rep);
  }
  json out = summary_json(rep);
  if (cfg.out.empty() && !g.json_out) {
    write_csv(std::cout, rep);
  } else {
    if (!cfg.out.empty()) out["out"] = cfg.out;
    emit(g, out);
  }
  if (cfg.out.empty() && !g.json_out) std::cerr << summary_json(rep).dump() << '\n';
  return rep.summary.violated == 0 ? 0 : kExitViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact finite-field index decomposition, character sums and bound checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json_out, "JSON output");
  app.add_option("--threads", g.threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--field", g.field, "Field literal, e.g. q=7, q=3^2, q=3^2;mod=2,1,1");

  std::string poly_text;
  bool nonzero = false;
  std::string bound_sel = "all";

  auto* field_cmd = app.add_subcommand("field", "Describe the canonical field");
  auto* index_cmd = app.add_subcommand("index", "Index form of a polynomial");
  index_cmd->add_option("--poly", poly_text, "Polynomial")->required();
  auto* charsum_cmd = app.add_subcommand("charsum", "Exact additive character sum");
  charsum_cmd->add_option("--poly", poly_text, "Polynomial")->required();
  charsum_cmd->add_flag("--nonzero", nonzero, "Sum over nonzero x only");

  auto* bounds_cmd = app.add_subcommand("bounds", "Weil and index bounds for one polynomial, or a sweep");
  bounds_cmd->add_option("--poly", poly_text, "Polynomial");
  bounds_cmd->add_option("--bound", bound_sel, "weil, index, cyclo or all")
      ->check(CLI::IsMember({"weil", "index", "cyclo", "all"}));
  std::string sweep_fields, sweep_family = "binomials", sweep_out, sweep_bounds = "index";
  std::uint64_t sweep_seed = 0;
  auto* bsweep_cmd = bounds_cmd->add_subcommand("sweep", "Bound campaign over fields and a family");
  bsweep_cmd->add_option("--fields", sweep_fields, "Comma-separated q values or literals")->required();
  bsweep_cmd->add_option("--family", sweep_family, "monomials, binomials, trinomials or random")
      ->check(CLI::IsMember({"monomials", "binomials", "trinomials", "random"}));
  bsweep_cmd->add_option("--bounds", sweep_bounds, "Comma-separated subset of weil,index,binomial,cyclo");
  bsweep_cmd->add_option("--seed", sweep_seed, "Seed for the random family");
  bsweep_cmd->add_option("--out", sweep_out, "CSV output path");

  std::uint64_t bn = 0, br = 0;
  std::string ba;
  auto* binomial_cmd = app.add_subcommand("binomial", "Binomial x^n + a x^r report");
  binomial_cmd->add_option("--n", bn, "Leading exponent")->required();
  binomial_cmd->add_option("--r", br, "Lower exponent")->required();
  binomial_cmd->add_option("--a", ba, "Coefficient")->required();

  std::uint64_t as_q = 0;
  unsigned as_m = 1;
  bool as_bound = false;
  auto* as_cmd = app.add_subcommand("ascurve", "Points on y^q - y = g(x) over F_{q^m}");
  as_cmd->add_option("--q", as_q, "Base field size")->required();
  as_cmd->add_option("--m", as_m, "Extension degree")->required();
  as_cmd->add_option("--poly", poly_text, "g over F_{q^m}")->required();
  as_cmd->add_flag("--bound", as_bound, "Include the index-interval report");

  std::uint64_t code_q = 0, code_N = 0, code_budget = 1u << 20, code_seed = 0;
  unsigned code_m = 1;
  std::string code_J, code_a, code_out;
  bool code_min = false, code_verify = false;
  auto* code_cmd = app.add_subcommand("code", "Trace-form cyclic code weights");
  code_cmd->add_option("--q", code_q, "Base field size")->required();
  code_cmd->add_option("--m", code_m, "Extension degree")->required();
  code_cmd->add_option("--N", code_N, "Length")->required();
  code_cmd->add_option("--J", code_J, "Check set, comma-separated")->required();
  code_cmd->add_option("--a", code_a, "One codeword parameter, ';'-separated elements");
  code_cmd->add_flag("--min-weight", code_min, "Search the minimum weight and compare with the floor");
  code_cmd->add_flag("--verify-bounds", code_verify, "Check every weight against its window");
  code_cmd->add_option("--out", code_out, "CSV of codeword weights");
  code_cmd->add_option("--budget", code_budget, "Enumeration budget");
  code_cmd->add_option("--seed", code_seed, "Seed when sampling");

  std::string config_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a campaign from a JSON config");
  sweep_cmd->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*field_cmd) {
      emit(g, to_json(need_field(g)));
    } else if (*index_cmd) {
      const FiniteField F = need_field(g);
      emit(g, to_json(F, index_form(F, parse_poly(F, poly_text))));
    } else if (*charsum_cmd) {
      const FiniteField F = need_field(g);
      const SparsePoly p = canonicalize(F, parse_poly(F, poly_text));
      emit(g, charsum_json(nonzero ? char_sum_nonzero(F, p) : char_sum_full(F, p)));
    } else if (*bsweep_cmd) {
      std::vector<std::string> fields;
      for (const std::string& f : split(sweep_fields, ',')) fields.push_back(f.rfind("q=", 0) == 0 ? f : "q=" + f);
      const CampaignConfig cfg = parse_campaign(json{{"fields", fields},
                                                     {"family", {{"kind", sweep_family}}},
                                                     {"bounds", split(sweep_bounds, ',')},
                                                     {"seed", sweep_seed},
                                                     {"out", sweep_out},
                                                     {"threads", g.threads}});
      return run_sweep(g, cfg);
    } else if (*bounds_cmd) {
      if (poly_text.empty()) throw CLI::RequiredError("--poly");
      const FiniteField F = need_field(g);
      const SparsePoly p = canonicalize(F, parse_poly(F, poly_text));
      json out = json::object();
      if (bound_sel == "weil" || bound_sel == "all") out["weil"] = to_json(weil_report(F, p));
      if (bound_sel == "index" || bound_sel == "all") out["index"] = to_json(index_report(F, p));
      if (bound_sel == "cyclo" || bound_sel == "all") {
        const CyclotomicMapping map = mapping_from_index(F, index_form(F, p));
        for (CycloVariant v : {CycloVariant::Full, CycloVariant::Monomial, CycloVariant::Nonzero}) {
          out["cyclo_" + std::string(to_string(v))] = to_json(cyclo_report(F, map, v));
        }
      }
      emit(g, out);
    } else if (*binomial_cmd) {
      const FiniteField F = need_field(g);
      const BinomialReport rep = binomial_report(F, bn, br, parse_element(F, ba));
      emit(g, {{"ell", rep.ell},
               {"t", rep.t},
               {"u", rep.u},
               {"k", rep.k},
               {"root_exists", rep.root_exists},
               {"root_by_search", rep.root_by_search},
               {"root_by_dlog", rep.root_by_dlog},
               {"report", to_json(rep.report)}});
    } else if (*as_cmd) {
      const auto ctx = make_as_context(as_q, as_m);
      const ASInstance inst{ctx, canonicalize(*ctx->ext, parse_poly(*ctx->ext, poly_text))};
      const std::int64_t direct = as_count_direct(inst), via_chars = as_count_charsum(inst);
      json out{{"N", direct}, {"N_direct", direct}, {"N_charsum", via_chars}, {"field", ctx->ext->describe()}};
      if (as_bound) out["bound_report"] = to_json(as_report(inst, direct));
      emit(g, out);
      if (direct != via_chars) return kExitDomain;
    } else if (*code_cmd) {
      return run_code(g, code_q, code_m, code_N, code_J, code_a, code_min, code_verify, code_out, code_budget,
                      code_seed);
    } else if (*sweep_cmd) {
      std::ifstream in(config_path);
      json j;
      try {
        j = json::parse(in);
      } catch (const json::exception& e) {
        throw Error(ErrorCode::ConfigError, e.what());
      }
      return run_sweep(g, parse_campaign(j));
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return 0;
}
