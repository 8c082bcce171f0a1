#include "cli.hpp"

#include "tracemin/definiteness.hpp"
#include "tracemin/genpairs.hpp"
#include "tracemin/hyperbolic.hpp"
#include "tracemin/spectral.hpp"
#include "tracemin/tracemin.hpp"
#include "tracemin/witness.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace tracemin::cli {

namespace {

void dump_rec(const Json& j, int indent, int depth, std::string& out) {
  const std::string pad = indent > 0 ? std::string(static_cast<size_t>(indent * (depth + 1)), ' ') : "";
  const std::string pad_close = indent > 0 ? std::string(static_cast<size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        out += Json(it.key()).dump();
        out += indent > 0 ? ": " : ":";
        dump_rec(it.value(), indent, depth + 1, out);
      }
      out += nl;
      out += pad_close;
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Short numeric arrays stay on one line.
      bool flat = j.size() <= 2;
      for (const auto& e : j) {
        if (e.is_structured()) flat = false;
      }
      out += "[";
      if (!flat) out += nl;
      bool first = true;
      for (const auto& e : j) {
        if (!first) {
          out += ",";
          out += flat ? " " : nl;
        }
        first = false;
        if (!flat) out += pad;
        dump_rec(e, indent, depth + 1, out);
      }
      if (!flat) {
        out += nl;
        out += pad_close;
      }
      out += "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read file " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("invalid JSON: ") + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write file " + path);
  out << text << "\n";
}

double num(const Json& v) {
  if (!v.is_number()) throw Error(ErrorKind::InvalidInput, "expected a number");
  return v.get<double>();
}

Json tolerances_json(const ToleranceSet& t) {
  Json j;
  j["herm_tol"] = t.herm_tol;
  j["rank_tol"] = t.rank_tol;
  j["psd_tol"] = t.psd_tol;
  j["type_tol"] = t.type_tol;
  j["feas_tol"] = t.feas_tol;
  return j;
}

Json inertia_json(const Inertia& in) {
  Json j;
  j["n_plus"] = in.n_plus;
  j["n_zero"] = in.n_zero;
  j["n_minus"] = in.n_minus;
  return j;
}

Json interval_json(const std::optional<std::pair<double, double>>& iv) {
  if (!iv) return nullptr;
  return Json::array({iv->first, iv->second});
}

Json definiteness_json(const DefinitenessReport& d) {
  Json j;
  j["is_psd_pair"] = d.is_psd_pair;
  j["is_nsd_pair"] = d.is_nsd_pair;
  j["psd_interval"] = interval_json(d.psd_interval);
  j["nsd_interval"] = interval_json(d.nsd_interval);
  j["max_fmin"] = d.max_fmin;
  j["argmax_shift"] = d.argmax_shift;
  j["bracket_overflow"] = d.bracket_overflow;
  j["scale"] = d.scale;
  return j;
}

Json typed_list(const std::vector<TypedEigenvalue>& v) {
  Json a = Json::array();
  for (const auto& e : v) {
    Json j;
    j["value"] = e.value;
    j["b_form"] = e.b_form;
    j["jordan_pair"] = e.jordan_pair;
    a.push_back(j);
  }
  return a;
}

Json spectrum_json(const TypedSpectrum& s) {
  Json j;
  j["pos"] = typed_list(s.pos);
  j["neg"] = typed_list(s.neg);
  j["deflated_dims"] = s.deflated_dims;
  j["infinite_definite_sign"] = to_string(s.infinite_definite_sign);
  j["nonreal_count"] = s.nonreal_count;
  j["isotropic_count"] = s.isotropic_count;
  j["route"] = to_string(s.route);
  j["complete"] = s.complete;
  return j;
}

Json infimum_json(const InfimumResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["value"] = r.value;
  j["sign_case"] = to_string(r.sign_case);
  j["reason"] = to_string(r.reason);
  j["attainable"] = to_string(r.attainable);
  j["detail"] = r.detail;
  if (r.excluded) {
    Json e;
    e["which"] = to_string(r.excluded->which);
    e["mu"] = r.excluded->mu;
    e["constant"] = r.excluded->constant;
    j["excluded"] = e;
  } else {
    j["excluded"] = nullptr;
  }
  if (r.properness) {
    Json p;
    p["is_proper"] = r.properness->is_proper;
    p["case"] = to_string(r.properness->case_label);
    p["d_plus"] = r.properness->d_plus;
    p["d_minus"] = r.properness->d_minus;
    j["properness"] = p;
  } else {
    j["properness"] = nullptr;
  }
  Json terms = Json::array();
  for (const Term& t : r.terms) {
    Json tj;
    tj["group"] = t.group;
    tj["type"] = t.positive_type ? "positive" : "negative";
    tj["hat_index"] = t.hat_index;
    tj["index"] = t.index;
    tj["hat_value"] = t.hat_value;
    tj["value"] = t.value;
    tj["product"] = t.product;
    terms.push_back(tj);
  }
  j["terms"] = terms;
  j["inertia_B"] = inertia_json(r.inertia_B);
  j["inertia_Bhat"] = inertia_json(r.inertia_Bhat);
  if (r.verdict != Verdict::ExcludedConstant) {
    j["spectrum"] = spectrum_json(r.spectrum);
    j["hat_spectrum"] = spectrum_json(r.hat_spectrum);
    j["definiteness"] = definiteness_json(r.definiteness);
    j["hat_definiteness"] = definiteness_json(r.hat_definiteness);
  }
  return j;
}

HermitianMatrix read_hermitian(const Json& doc, const char* key, double herm_tol) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw Error(ErrorKind::InvalidInput, std::string("missing matrix ") + key);
  }
  return validate_hermitian(parse_matrix(doc.at(key)), herm_tol);
}

MatrixPair read_pair(const Json& doc, const char* a, const char* b, double herm_tol) {
  HermitianMatrix A = read_hermitian(doc, a, herm_tol);
  HermitianMatrix B = read_hermitian(doc, b, herm_tol);
  return MatrixPair(std::move(A), std::move(B));
}

ProblemInstance read_problem(const std::string& path, const ToleranceSet& tols) {
  const Json doc = read_json_file(path);
  return ProblemInstance(read_pair(doc, "A", "B", tols.herm_tol),
                         read_pair(doc, "Ahat", "Bhat", tols.herm_tol), tols);
}

BlockKind parse_kind(const std::string& s) {
  if (s == "To") return BlockKind::To;
  if (s == "Ts") return BlockKind::Ts;
  if (s == "Tinf") return BlockKind::Tinf;
  if (s == "Tc") return BlockKind::Tc;
  if (s == "Tr") return BlockKind::Tr;
  throw Error(ErrorKind::InvalidSpec, "unknown block kind " + s);
}

Json truth_json(const GroundTruth& t) {
  Json j;
  j["inertia_B"] = inertia_json(t.inertia_B);
  j["pos"] = t.pos;
  j["neg"] = t.neg;
  j["jordan_pairs"] = t.jordan_pairs;
  j["complex_count"] = t.complex_count;
  j["deflated_dims"] = t.deflated_dims;
  j["psd"] = t.psd;
  j["nsd"] = t.nsd;
  j["diagonalizable"] = t.diagonalizable;
  j["typed_values_defined"] = t.typed_values_defined;
  return j;
}

int exit_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidInput:
    case ErrorKind::NotSquare:
    case ErrorKind::InvalidSpec:
    case ErrorKind::LengthMismatch:
      return kInvalidInput;
    case ErrorKind::NotHermitian: return kNotHermitian;
    case ErrorKind::EmptyFeasibleSet:
    case ErrorKind::InertiaViolation:
      return kEmptyFeasible;
    case ErrorKind::NotAttainable: return kNotAttainable;
    case ErrorKind::NoWitnessConstructible: return kNoWitness;
    case ErrorKind::CertificationFailed: return kCertificationFailed;
    default: return kInternal;
  }
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("PENCIL_TRACEMIN_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s, &end, 10);
    if (end != s) return v;
  }
  return 1;
}

struct Globals {
  ToleranceSet tols;
  bool json_only = false;
  std::uint64_t seed = 1;
};

Json header(const std::string& command, const Globals& g) {
  Json j;
  j["command"] = command;
  j["version"] = kVersion;
  j["seed"] = g.seed;
  j["tolerances"] = tolerances_json(g.tols);
  return j;
}

void emit(std::ostream& out, std::ostream& err, const Globals& g, const Json& report,
          const std::string& summary) {
  out << dump_json(report) << "\n";
  if (!g.json_only && !summary.empty()) err << summary << "\n";
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int cmd_analyze(const std::string& path, const Globals& g, std::ostream& out, std::ostream& err) {
  const Json doc = read_json_file(path);
  const MatrixPair pair = read_pair(doc, "A", "B", g.tols.herm_tol);
  const PencilAnalysis an = analyze_pencil(pair, g.tols);
  const Deflation dfl = deflate_common_nullspace(pair, g.tols.rank_tol);
  const DefinitenessReport d = definiteness_interval(dfl.reduced, g.tols);
  Json r = header("analyze", g);
  r["n"] = pair.n();
  r["inertia_A"] = inertia_json(inertia(pair.A, g.tols.rank_tol));
  r["inertia_B"] = inertia_json(inertia(pair.B, g.tols.rank_tol));
  r["deflated_dims"] = dfl.deflated_dims;
  r["definiteness"] = definiteness_json(d);
  r["typed_spectrum"] = spectrum_json(an.spectrum);
  r["diagonalizable"] = an.diagonalizable;
  std::string s = std::string("psd=") + (d.is_psd_pair ? "true" : "false") +
                  " nsd=" + (d.is_nsd_pair ? "true" : "false") +
                  " pos=" + std::to_string(an.spectrum.pos.size()) +
                  " neg=" + std::to_string(an.spectrum.neg.size());
  emit(out, err, g, r, s);
  return kOk;
}

int cmd_infimum(const std::string& path, const Globals& g, std::ostream& out, std::ostream& err) {
  const ProblemInstance pb = read_problem(path, g.tols);
  const InfimumResult res = infimum(pb);
  Json r = header("infimum", g);
  r["result"] = infimum_json(res);
  std::string s = std::string(to_string(res.verdict)) + " " +
                  (res.verdict == Verdict::NegInfinite ? std::string(to_string(res.reason))
                                                       : fmt(res.value));
  emit(out, err, g, r, s);
  return res.verdict == Verdict::NegInfinite ? kNegInfinite : kOk;
}

int cmd_minimize(const std::string& path, const std::string& out_path, const Globals& g,
                 std::ostream& out, std::ostream& err) {
  const ProblemInstance pb = read_problem(path, g.tols);
  const MinimizerResult m = minimizer(pb);
  write_text_file(out_path, dump_json(matrix_to_json(m.X)));
  Json r = header("minimize", g);
  r["result"] = infimum_json(m.infimum);
  r["out_file"] = out_path;
  r["achieved"] = m.achieved;
  r["feasibility_residual"] = m.feasibility_residual;
  emit(out, err, g, r, "achieved " + fmt(m.achieved) + " residual " + fmt(m.feasibility_residual));
  return kOk;
}

int cmd_witness(const std::string& path, double threshold, double t_max, const Globals& g,
                std::ostream& out, std::ostream& err) {
  const ProblemInstance pb = read_problem(path, g.tols);
  const InfimumResult res = infimum(pb);
  Json r = header("witness", g);
  r["result"] = infimum_json(res);
  WitnessOptions wo;
  wo.seed = g.seed;
  const WitnessFamily fam = build_witness(pb, res, wo);
  Json w;
  w["kind"] = to_string(fam.kind);
  w["mode"] = to_string(fam.mode);
  w["slope"] = fam.slope;
  w["offset"] = fam.offset;
  w["selectors"] = fam.selectors;
  r["witness"] = w;
  Json c;
  c["threshold"] = threshold;
  c["t_max"] = t_max;
  try {
    const Certification cert = certify_unbounded(fam, threshold, t_max);
    c["certified"] = true;
    c["t"] = cert.t;
    c["trace"] = cert.trace_value;
    c["residual"] = cert.residual;
    c["residual_bound"] = cert.residual_bound;
    r["certification"] = c;
    emit(out, err, g, r, std::string("certified ") + to_string(fam.kind) + " at t=" + fmt(cert.t));
    return kOk;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CertificationFailed) throw;
    c["certified"] = false;
    c["error"] = e.what();
    r["certification"] = c;
    emit(out, err, g, r, std::string("CertificationFailed: ") + e.what());
    return kCertificationFailed;
  }
}

int cmd_verify(const std::string& path, int samples, double spread, const Globals& g,
               std::ostream& out, std::ostream& err) {
  if (samples < 1) throw Error(ErrorKind::InvalidInput, "samples must be positive");
  if (!(spread >= 0.0)) throw Error(ErrorKind::InvalidInput, "spread must be nonnegative");
  const ProblemInstance pb = read_problem(path, g.tols);
  const InfimumResult res = infimum(pb);
  const FeasibleFrame fr = feasible_frame(pb.pair.B.mat(), pb.hat_pair.B.mat(), g.tols.rank_tol);
  double mn = std::numeric_limits<double>::infinity(), sum = 0.0, worst_res = 0.0;
  for (int i = 0; i < samples; ++i) {
    std::seed_seq sq{static_cast<std::uint32_t>(g.seed), static_cast<std::uint32_t>(g.seed >> 32),
                     static_cast<std::uint32_t>(i)};
    Rng rng(sq);
    const Mat X = sample_original(fr, spread, spread, rng);
    const double v = trace_objective(pb, X);
    mn = std::min(mn, v);
    sum += v;
    worst_res = std::max(worst_res, feasibility_residual(pb, X));
  }
  Json r = header("verify", g);
  r["result"] = infimum_json(res);
  Json s;
  s["samples"] = samples;
  s["spread"] = spread;
  s["min_trace"] = mn;
  s["mean_trace"] = sum / samples;
  s["max_feasibility_residual"] = worst_res;
  int code = kOk;
  std::string summary;
  if (res.verdict == Verdict::Finite || res.verdict == Verdict::ExcludedConstant) {
    const double slack = 1e-6 * (1.0 + std::abs(res.value));
    const bool ok = mn >= res.value - slack;
    s["gap"] = mn - res.value;
    s["lower_bound_holds"] = ok;
    if (!ok) code = kCertificationFailed;
    summary = std::string("min sample ") + fmt(mn) + " vs value " + fmt(res.value) +
              (ok ? " (bound holds)" : " (BOUND VIOLATED)");
  } else {
    s["most_negative_sample"] = mn;
    summary = "NegInfinite; most negative sample " + fmt(mn);
  }
  r["sampling"] = s;
  emit(out, err, g, r, summary);
  return code;
}

int cmd_gen(const std::string& spec_path, const std::string& out_path, const Globals& g,
            std::ostream& out, std::ostream& err) {
  const Json spec = read_json_file(spec_path);
  if (!spec.is_object() || !spec.contains("blocks") || !spec["blocks"].is_array()) {
    throw Error(ErrorKind::InvalidSpec, "spec needs a \"blocks\" array");
  }
  std::vector<BlockSpec> blocks;
  for (const auto& b : spec["blocks"]) {
    if (!b.is_object() || !b.contains("kind") || !b["kind"].is_string()) {
      throw Error(ErrorKind::InvalidSpec, "each block needs a \"kind\"");
    }
    BlockSpec bs;
    bs.kind = parse_kind(b["kind"].get<std::string>());
    if (b.contains("p")) {
      if (!b["p"].is_number_integer()) throw Error(ErrorKind::InvalidSpec, "p must be an integer");
      bs.p = b["p"].get<int>();
    }
    if (b.contains("alpha")) bs.alpha = num(b["alpha"]);
    if (b.contains("beta")) bs.beta = num(b["beta"]);
    if (b.contains("eta")) {
      if (!b["eta"].is_number_integer()) throw Error(ErrorKind::InvalidSpec, "eta must be +1 or -1");
      bs.eta = b["eta"].get<int>();
    }
    blocks.push_back(bs);
  }
  const std::uint64_t seed =
      spec.contains("seed") ? spec["seed"].get<std::uint64_t>() : g.seed;
  const double cap = spec.contains("cap") ? num(spec["cap"]) : 10.0;
  const Assembly as = assemble(blocks, seed, cap);
  Json pair;
  pair["A"] = matrix_to_json(as.pair.A.mat());
  pair["B"] = matrix_to_json(as.pair.B.mat());
  write_text_file(out_path, dump_json(pair));
  const Json truth = truth_json(as.truth);
  write_text_file(out_path + ".truth.json", dump_json(truth));
  Json r = header("gen", g);
  r["out_file"] = out_path;
  r["truth_file"] = out_path + ".truth.json";
  r["scramble_seed"] = seed;
  r["cap"] = cap;
  r["n"] = as.pair.n();
  r["truth"] = truth;
  emit(out, err, g, r, "wrote " + out_path);
  return kOk;
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string s;
  dump_rec(j, indent, 0, s);
  return s;
}

Mat parse_matrix(const Json& j) {
  if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array()) {
    throw Error(ErrorKind::InvalidInput, "matrix needs an \"entries\" array");
  }
  const Json& e = j["entries"];
  Eigen::Index rows = 0, cols = 0;
  if (j.contains("n")) {
    if (!j["n"].is_number_integer()) throw Error(ErrorKind::InvalidInput, "n must be an integer");
    rows = cols = j["n"].get<Eigen::Index>();
  } else if (j.contains("rows") && j.contains("cols")) {
    rows = j["rows"].get<Eigen::Index>();
    cols = j["cols"].get<Eigen::Index>();
  } else {
    throw Error(ErrorKind::InvalidInput, "matrix needs \"n\"");
  }
  if (rows < 0 || cols < 0) throw Error(ErrorKind::InvalidInput, "negative dimension");
  if (static_cast<Eigen::Index>(e.size()) != rows * cols) {
    throw Error(ErrorKind::NotSquare, "entry count does not match the dimension");
  }
  Mat m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index k = 0; k < cols; ++k) {
      const Json& v = e[static_cast<size_t>(i * cols + k)];
      if (v.is_number()) {
        m(i, k) = cplx(v.get<double>(), 0.0);
      } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        m(i, k) = cplx(v[0].get<double>(), v[1].get<double>());
      } else {
        throw Error(ErrorKind::InvalidInput, "matrix entries must be numbers or [re, im]");
      }
    }
  }
  return m;
}

Json matrix_to_json(const Mat& m) {
  Json j;
  if (m.rows() == m.cols()) {
    j["n"] = m.rows();
  } else {
    j["rows"] = m.rows();
    j["cols"] = m.cols();
  }
  Json e = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      e.push_back(Json::array({m(i, k).real(), m(i, k).imag()}));
    }
  }
  j["entries"] = e;
  return j;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Trace minimization over Hermitian pencils", "pencil_tracemin"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  Globals g;
  g.seed = default_seed();
  app.add_option("--tol-herm", g.tols.herm_tol, "Hermiticity tolerance");
  app.add_option("--tol-rank", g.tols.rank_tol, "relative rank tolerance");
  app.add_option("--tol-psd", g.tols.psd_tol, "semidefiniteness tolerance");
  app.add_option("--tol-type", g.tols.type_tol, "eigenvalue typing tolerance");
  app.add_option("--tol-feas", g.tols.feas_tol, "feasibility tolerance");
  app.add_flag("--json", g.json_only, "print only the JSON report");
  app.add_option("--seed", g.seed, "random seed (default: PENCIL_TRACEMIN_SEED or 1)");

  std::string in_file, out_file;
  double threshold = -1e6, t_max = 1e4, spread = 2.0;
  int samples = 2000;

  auto* analyze = app.add_subcommand("analyze", "inertia, definiteness and typed spectrum of a pair");
  analyze->add_option("pair_file", in_file)->required();
  auto* inf = app.add_subcommand("infimum", "finiteness verdict and closed-form value");
  inf->add_option("problem_file", in_file)->required();
  auto* mini = app.add_subcommand("minimize", "construct a minimizer");
  mini->add_option("problem_file", in_file)->required();
  mini->add_option("out_file", out_file)->required();
  auto* wit = app.add_subcommand("witness", "build and certify a divergence witness");
  wit->add_option("problem_file", in_file)->required();
  wit->add_option("--threshold", threshold, "certify trace <= threshold");
  wit->add_option("--tmax", t_max, "largest parameter to try");
  auto* ver = app.add_subcommand("verify", "Monte-Carlo check against sampled feasible points");
  ver->add_option("problem_file", in_file)->required();
  ver->add_option("--samples", samples, "number of samples");
  ver->add_option("--spread", spread, "hyperbolic spread of the samples");
  auto* gen = app.add_subcommand("gen", "generate a pair from canonical blocks");
  gen->add_option("spec_file", in_file)->required();
  gen->add_option("out_pair_file", out_file)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help() << "\n";
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(in_file, g, out, err);
    if (inf->parsed()) return cmd_infimum(in_file, g, out, err);
    if (mini->parsed()) return cmd_minimize(in_file, out_file, g, out, err);
    if (wit->parsed()) return cmd_witness(in_file, threshold, t_max, g, out, err);
    if (ver->parsed()) return cmd_verify(in_file, samples, spread, g, out, err);
    if (gen->parsed()) return cmd_gen(in_file, out_file, g, out, err);
  } catch (const Error& e) {
    Json r;
    r["error"] = to_string(e.kind());
    r["message"] = e.what();
    out << dump_json(r) << "\n";
    if (!g.json_only) err << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_for(e.kind());
  } catch (const Json::exception& e) {
    err << "invalid input: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInvalidInput;
}

}  // namespace tracemin::cli
