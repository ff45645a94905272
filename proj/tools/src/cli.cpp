#include "hypexp_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hypexp/error.hpp"
#include "hypexp/fingerprint.hpp"
#include "hypexp/gauss.hpp"
#include "hypexp/kubert.hpp"
#include "hypexp/parallel.hpp"
#include "hypexp/sheaf.hpp"
#include "hypexp_cli/reports.hpp"
#include "hypexp_cli/selftest.hpp"

namespace hypexp::cli {

namespace {

struct Outcome {
  std::string body;  // report text, newline terminated
  int code = kOk;
};

Outcome json_outcome(const Json& j, bool ok) { return {j.dump(2) + "\n", ok ? kOk : kViolation}; }

[[noreturn]] void usage(const std::string& msg) { raise(ErrorKind::InvalidArgument, msg); }

std::optional<FieldElement> point(const FiniteField& K, const RunConfig& cfg) {
  if (cfg.t && cfg.t_dlog) usage("give either --t or --t-dlog, not both");
  if (cfg.t) {
    if (K.degree() != 1) usage("--t names a prime-field point; use --t-dlog when r > 1");
    return K.from_int(*cfg.t);
  }
  if (cfg.t_dlog) return K.exp(*cfg.t_dlog % (K.size() - 1));
  return std::nullopt;
}

SumOptions sum_options(const RunConfig& cfg) { return {1, cfg.workers}; }

Json counts_json(const RouCounts& v) { return std::vector<i64>(v.counts().begin(), v.counts().end()); }

Outcome cmd_trace(const RunConfig& cfg) {
  const auto P = SheafParams::make(cfg.p, cfg.N, cfg.D);
  const auto K = build_field(cfg.p, cfg.r);
  const auto opt = sum_options(cfg);
  const TraceKind kind = trace_kind_from_string(cfg.kind);
  if (cfg.format != "json" && cfg.format != "csv") usage("--format must be json or csv");
  if (auto t = point(K, cfg)) {
    RouCounts v;
    switch (kind) {
      case TraceKind::H: v = trace_H(K, P, *t, opt); break;
      case TraceKind::F: v = trace_F(K, P, *t, opt); break;
      case TraceKind::A0: v = kloosterman_A0_trace(K, P.N, *t, opt); break;
      case TraceKind::B0: v = kloosterman_B0_trace(K, P.D, *t, opt); break;
      case TraceKind::Convolution: v = convolution_trace(K, P, *t, opt); break;
      default: usage("trace kind " + cfg.kind + " is not supported here");
    }
    Json j;
    j["kind"] = cfg.kind;
    j["p"] = cfg.p;
    j["N"] = cfg.N;
    j["D"] = cfg.D;
    j["r"] = cfg.r;
    j["t"] = t->value == 0 ? Json("0") : Json(K.dlog(*t));
    j["counts"] = counts_json(v);
    if (v.is_rational()) j["value"] = to_exact_integer(v);
    return json_outcome(j, true);
  }
  std::optional<TraceTable> table;
  switch (kind) {
    case TraceKind::H: table = HTraceEngine(K, P, opt).table(); break;
    case TraceKind::F: table = trace_F_table(K, P, opt); break;
    case TraceKind::A0: table = kloosterman_A0_table(K, P.N, opt); break;
    case TraceKind::B0: table = kloosterman_B0_table(K, P.D, opt); break;
    case TraceKind::Convolution: table = ConvolutionEngine(K, P, opt).table(); break;
    default: usage("trace kind " + cfg.kind + " is not supported here");
  }
  if (cfg.format == "csv") {
    std::ostringstream os;
    write_csv(os, *table);
    return {os.str(), kOk};
  }
  return {to_json(*table) + "\n", kOk};
}

Outcome cmd_frobenius(const RunConfig& cfg) {
  const auto P = SheafParams::make(cfg.p, cfg.N, cfg.D);
  const auto base = build_field(cfg.p, cfg.r);
  const auto t = point(base, cfg);
  if (!t) usage("frobenius needs --t or --t-dlog");
  if (cfg.kmax < 1) usage("--kmax must be >= 1");
  const auto seq = frobenius_trace_sequence(P, base, *t, cfg.kmax, sum_options(cfg));
  return {sequence_json(seq).dump() + "\n", kOk};
}

Outcome cmd_vcheck(const RunConfig& cfg) {
  if (auto why = params_violation(cfg.p, cfg.N, cfg.D)) raise(ErrorKind::InvalidParams, *why);
  const auto rep = check_criterion(cfg.p, cfg.N, cfg.D, cfg.r_max.value_or(8), cfg.workers);
  return json_outcome(criterion_json(rep), rep.pass && rep.bracket_disagreements.empty());
}

Outcome cmd_lemma(const RunConfig& cfg) {
  const unsigned r_max = cfg.r_max.value_or(13);
  const auto lemma = check_lemma_bound(r_max, cfg.workers);
  const auto cor = check_corollary(cfg.corollary_r_max, cfg.workers);
  const auto special = check_corollary_special_points(cfg.corollary_r_max);
  return json_outcome(lemma_json(r_max, lemma, cfg.corollary_r_max, cor, special),
                      lemma.empty() && cor.empty() && special.empty());
}

Outcome cmd_search(const RunConfig& cfg) {
  const auto rep = search_candidates(cfg.p, cfg.N_max, cfg.D_max, cfg.r_max.value_or(8), cfg.workers);
  return json_outcome(search_json(rep), true);
}

Json complex_json(const ComplexValue& v) {
  return {{"re", v.value.real()}, {"im", v.value.imag()}, {"abs", std::abs(v.value)}, {"error_bound", v.error_bound}};
}

Outcome cmd_det(const RunConfig& cfg) {
  const auto P = SheafParams::make(cfg.p, cfg.N, cfg.D);
  const auto det = determinant_sign(P);
  const unsigned d = cfg.d.value_or(det.d);
  const auto ev = frob_zero_eigenvalues(P, d);
  const auto values = ev.complex_values();
  bool ok = true;
  Json list = Json::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    Json e = complex_json(values[i]);
    e["rho"] = ev.rho[i];
    ok = ok && std::abs(std::abs(values[i].value) - 1.0) <= 1e-9;
    list.push_back(std::move(e));
  }
  const auto prod = ev.complex_product();
  Json j;
  j["p"] = cfg.p;
  j["N"] = cfg.N;
  j["D"] = cfg.D;
  j["d"] = d;
  j["eigenvalues"] = std::move(list);
  j["product"] = complex_json(prod);
  j["determinant_sign"] = std::string(to_string(det.sign));
  j["sign_degree"] = det.d;
  if (det.sign != DetSign::NotCovered && d == det.d) {
    const double expect = det.sign == DetSign::Plus ? 1.0 : -1.0;
    const bool agrees = std::abs(prod.value - std::complex<double>(expect, 0.0)) <= 1e-6;
    j["product_matches_sign"] = agrees;
    ok = ok && agrees;
  }
  return json_outcome(j, ok);
}

Outcome cmd_verify_convolution(const RunConfig& cfg) {
  const auto P = SheafParams::make(cfg.p, cfg.N, cfg.D);
  const auto K = build_field(cfg.p, cfg.r);
  const auto opt = sum_options(cfg);
  const ConvolutionEngine conv(K, P, opt);
  const u64 n = K.size() - 1;
  std::vector<std::uint8_t> bad(n, 0);
  parallel_chunks(n, cfg.workers, [&](std::size_t b, std::size_t e, unsigned) {
    for (u64 k = b; k < e; ++k) {
      const auto t = K.exp(k);
      bad[k] = !(conv.trace(t) == trace_H(K, P, t));
    }
  });
  Json mismatches = Json::array();
  for (u64 k = 0; k < n; ++k) {
    if (bad[k]) mismatches.push_back(k);
  }
  Json j;
  j["p"] = cfg.p;
  j["N"] = cfg.N;
  j["D"] = cfg.D;
  j["r"] = cfg.r;
  j["points"] = n;
  j["mismatches_dlog"] = mismatches;
  j["verdict"] = mismatches.empty() ? "pass" : "fail";
  return json_outcome(j, mismatches.empty());
}

Outcome cmd_identify(const RunConfig& cfg, std::istream& in) {
  std::string text = cfg.seq;
  if (!cfg.seq_file.empty()) {
    if (!text.empty()) usage("give either --seq or --seq-file, not both");
    std::stringstream ss;
    if (cfg.seq_file == "-") {
      ss << in.rdbuf();
    } else {
      std::ifstream f(cfg.seq_file);
      if (!f) usage("cannot open " + cfg.seq_file);
      ss << f.rdbuf();
    }
    text = ss.str();
  }
  if (text.empty()) usage("identify needs --seq or --seq-file");
  const auto seq = parse_sequence(text);
  if (seq.empty() || seq.size() > 7) usage("sequence length must be between 1 and 7");
  const auto dir = cfg.data_dir.empty() ? chartable_dir() : std::filesystem::path(cfg.data_dir);
  const auto rep = identify(load_candidate_tables(dir), seq);
  return json_outcome(identification_json(rep), !rep.admitting_groups().empty());
}

Outcome cmd_selftest(const RunConfig& cfg) {
  const auto results = run_selftest(cfg.workers, cfg.seed);
  Json checks = Json::array();
  bool ok = true;
  for (const auto& r : results) {
    checks.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    ok = ok && r.pass;
  }
  return json_outcome(Json{{"checks", checks}, {"verdict", ok ? "pass" : "fail"}}, ok);
}

Outcome dispatch(const RunConfig& cfg, std::istream& in) {
  if (cfg.workers == 0) usage("--workers must be >= 1");
  const auto& c = cfg.command;
  if (c == "trace") return cmd_trace(cfg);
  if (c == "frobenius") return cmd_frobenius(cfg);
  if (c == "v-check") return cmd_vcheck(cfg);
  if (c == "lemma-check") return cmd_lemma(cfg);
  if (c == "search") return cmd_search(cfg);
  if (c == "det") return cmd_det(cfg);
  if (c == "verify-convolution") return cmd_verify_convolution(cfg);
  if (c == "identify") return cmd_identify(cfg, in);
  if (c == "selftest") return cmd_selftest(cfg);
  usage("unknown command '" + c + "'");
}

void write_meta(const RunConfig& cfg, double seconds, int code) {
  Json meta;
  meta["command"] = cfg.command;
  meta["exit_code"] = code;
  meta["workers"] = cfg.workers;
  meta["seed"] = cfg.seed;
  meta["elapsed_seconds"] = seconds;
  meta["timestamp_unix"] =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::system_clock::now().time_since_epoch()).count();
  std::ofstream f(cfg.meta_out);
  if (!f) usage("cannot write " + cfg.meta_out);
  f << meta.dump(2) << '\n';
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err, std::istream& in) {
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = dispatch(cfg, in);
    if (cfg.out.empty()) {
      out << o.body;
    } else {
      std::ofstream f(cfg.out, std::ios::binary);
      if (!f) usage("cannot write " + cfg.out);
      f << o.body;
    }
    if (!cfg.meta_out.empty()) {
      write_meta(cfg, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), o.code);
    }
    return o.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"Exponential sums, Kubert V and monodromy fingerprints", "hypexp"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out,-o", cfg.out, "Report path (default: stdout)");
    sub->add_option("--meta-out", cfg.meta_out, "Sidecar file for run metadata");
    sub->add_option("--workers,-j", cfg.workers, "Worker threads")->capture_default_str();
  };
  auto add_pnd = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "Characteristic")->capture_default_str();
    sub->add_option("--N", cfg.N)->capture_default_str();
    sub->add_option("--D", cfg.D)->capture_default_str();
  };
  auto add_point = [&](CLI::App* sub) {
    sub->add_option("--t", cfg.t, "Prime-field point as an integer");
    sub->add_option("--t-dlog", cfg.t_dlog, "Point as generator^k");
  };

  auto* trace = app.add_subcommand("trace", "Trace table (or single value) of H, F, A0, B0 or the convolution");
  add_pnd(trace);
  add_point(trace);
  trace->add_option("--r", cfg.r, "Field degree")->capture_default_str();
  trace->add_option("--kind", cfg.kind, "H, F, A0, B0 or Convolution")->capture_default_str();
  trace->add_option("--format", cfg.format, "json or csv")->capture_default_str();
  add_common(trace);

  auto* frob = app.add_subcommand("frobenius", "Normalized traces over GF(p^(r k)), k = 1..kmax");
  add_pnd(frob);
  add_point(frob);
  frob->add_option("--r", cfg.r, "Degree of the field holding t")->capture_default_str();
  frob->add_option("--kmax", cfg.kmax)->capture_default_str();
  add_common(frob);

  auto* vcheck = app.add_subcommand("v-check", "Exhaustive V(Nx) + V(-Dx) + V(x) >= 1 test");
  add_pnd(vcheck);
  vcheck->add_option("--rmax", cfg.r_max, "Largest level (default 8)");
  add_common(vcheck);

  auto* lemma = app.add_subcommand("lemma-check", "Digit-sum bound for (3, 23, 4) and its corollary");
  lemma->add_option("--rmax", cfg.r_max, "Largest level for the bound (default 13)");
  lemma->add_option("--corollary-rmax", cfg.corollary_r_max)->capture_default_str();
  add_common(lemma);

  auto* search = app.add_subcommand("search", "Scan (N, D) for pairs passing the criterion");
  search->add_option("--p", cfg.p)->capture_default_str();
  search->add_option("--Nmax", cfg.N_max)->capture_default_str();
  search->add_option("--Dmax", cfg.D_max)->capture_default_str();
  search->add_option("--rmax", cfg.r_max, "Largest level (default 8)");
  add_common(search);

  auto* det = app.add_subcommand("det", "Frobenius eigenvalues at 0 and the determinant sign");
  add_pnd(det);
  det->add_option("--d", cfg.d, "Field degree (default: order of p mod N)");
  add_common(det);

  auto* conv = app.add_subcommand("verify-convolution", "Check convolution = H pointwise on GF(p^r)^x");
  add_pnd(conv);
  conv->add_option("--r", cfg.r, "Field degree")->capture_default_str();
  add_common(conv);

  auto* ident = app.add_subcommand("identify", "Match a trace sequence against the candidate groups");
  ident->add_option("--seq", cfg.seq, "Comma separated integers or a JSON array");
  ident->add_option("--seq-file", cfg.seq_file, "File holding a JSON array ('-' for stdin)");
  ident->add_option("--data-dir", cfg.data_dir, "Character table directory (overrides HYPEXP_DATA_DIR)");
  add_common(ident);

  auto* self = app.add_subcommand("selftest", "Run the property suite");
  self->add_option("--seed", cfg.seed)->capture_default_str();
  add_common(self);

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  for (auto* sub : app.get_subcommands()) cfg.command = sub->get_name();
  return run(cfg, out, err, in);
}

}  // namespace hypexp::cli
