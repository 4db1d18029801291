#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "yosp/hw/criteria.hpp"
#include "yosp/hw/linear.hpp"
#include "yosp/hw/reflections.hpp"
#include "yosp/io/json_io.hpp"
#include "yosp/sampling.hpp"
#include "yosp/superlinalg/r_matrix.hpp"
#include "yosp/yangian/central.hpp"
#include "yosp/yangian/gauss.hpp"
#include "yosp/yangian/gl12.hpp"
#include "yosp/yangian/highest_vector.hpp"
#include "yosp/yangian/rtt.hpp"

using namespace yosp;
using yosp::io::json;

namespace {

enum Exit { ok = 0, failed = 1, not_applicable = 2, usage = 64, data = 65 };

struct Options {
  bool json_out = false;
  int order = 8;
  int samples = 10;
  std::uint64_t seed = 1;
  int max_rank = 4;
  std::size_t max_dim = 64;
  int m = -1, n = -1;
  std::string parity;
  std::string module = "vector";
  std::string e_scale = "1";
  std::string kind, file, mode;
  int at = 0;
};

int exit_for(Verdict v) { return v == Verdict::pass ? ok : v == Verdict::fail ? failed : not_applicable; }

int emit(const Report& r, const Options& o, json extra = json::object()) {
  if (o.json_out) {
    json j = io::report_json(r);
    for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << io::report_text(r);
    for (auto it = extra.begin(); it != extra.end(); ++it) std::cout << "  " << it.key() << " = " << it.value().dump() << "\n";
  }
  return exit_for(r.verdict());
}

AlgebraContext resolve_context(const Options& o) {
  AlgebraContext ctx;
  if (!o.parity.empty()) {
    ctx = AlgebraContext::from_parity(o.parity);
    if ((o.m >= 0 && o.m != ctx.m()) || (o.n >= 0 && o.n != ctx.n()))
      throw InvalidInput("--parity " + o.parity + " does not match --m/--n");
  } else {
    ctx = AlgebraContext::standard(o.m < 0 ? 1 : o.m, o.n < 0 ? 1 : o.n);
  }
  if (ctx.rank() > o.max_rank) throw InvalidInput("m + n = " + std::to_string(ctx.rank()) + " exceeds the limit " + std::to_string(o.max_rank));
  return ctx;
}

Representation build_module(const AlgebraContext& ctx, const Options& o) {
  Representation rep;
  if (o.module == "vector") rep = vector_representation(ctx);
  else if (o.module == "tensor") rep = sharp_tensor(ctx, 2);
  else throw InvalidInput("--module must be vector or tensor");
  if (rep.dim() > o.max_dim)
    throw NotApplicable("module dimension " + std::to_string(rep.dim()) + " exceeds --max-dim " + std::to_string(o.max_dim));
  return rep;
}

Report verify_center(const Representation& rep, int order) {
  Report r;
  r.command = "verify center";
  ReportTimer timer(r);
  r.info["context"] = rep.context.name();
  r.info["module"] = rep.label;
  ScalarSeries c;
  try {
    c = central_series(rep, order);
    r.add("T(u-kappa)T^t(u) = c(u) 1", true, "c(u) = " + to_string(c));
  } catch (const Violation& e) {
    r.add("T(u-kappa)T^t(u) = c(u) 1", false, e.what());
    return r;
  }
  Vector xi(rep.dim());
  xi[0] = 1;
  const auto ext = extract_highest_weight(rep, xi, order);
  if (!ext.ok()) {
    r.add_not_applicable("c(u) = lambda_1(u) lambda_1'(u-n+m+1)", "e_1 is not a highest vector of this module");
    return r;
  }
  const ScalarSeries lhs =
      ext.components.front() * ext.components.back().shifted(Rational(-rep.context.n() + rep.context.m() + 1));
  r.add("c(u) = lambda_1(u) lambda_1'(u-n+m+1)", lhs == c, "on e_1 to order " + std::to_string(order));
  return r;
}

int run_verify(const Options& o) {
  if (o.order < 1 || o.order > 16) throw InvalidInput("--order must be between 1 and 16");
  if (o.samples < 1) throw InvalidInput("--samples must be positive");
  Report r;
  if (o.kind == "iso") {
    const AlgebraContext ctx = AlgebraContext::from_parity("01");
    PhiOptions opts;
    opts.e_scale = parse_rational(o.e_scale);
    r = verify_gl12_isomorphism(vector_representation(ctx), o.order, opts);
    return emit(r, o);
  }
  const AlgebraContext ctx = resolve_context(o);
  if (o.kind == "ybe") {
    r = check_yang_baxter(ctx, sampling::sample_pairs(ctx, static_cast<std::size_t>(o.samples), o.seed));
  } else if (o.kind == "rtt") {
    const Representation rep = build_module(ctx, o);
    const Rational k(ctx.kappa());
    auto regular = [&](const Rational& x) { return x != 0 && x != k && x != -k; };
    r = verify_rtt(rep, sampling::sample_pairs_if(static_cast<std::size_t>(o.samples), o.seed,
                                                  [&](const Rational& a, const Rational& b) { return regular(a) && regular(b) && regular(a - b); }));
  } else if (o.kind == "center") {
    r = verify_center(build_module(ctx, o), o.order);
  } else if (o.kind == "gauss") {
    r = verify_gauss(build_module(ctx, o), o.order);
  } else {
    throw InvalidInput("unknown verify kind '" + o.kind + "'");
  }
  r.info["seed"] = std::to_string(o.seed);
  return emit(r, o);
}

io::WeightDocument read_document(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw io::DocumentError(path, "cannot open");
    buf << in.rdbuf();
  }
  return io::parse_document(buf.str());
}

LinearWeight as_linear(const HighestWeight& hw) {
  std::vector<Rational> values;
  for (std::size_t i = 0; i < hw.components.size(); ++i) {
    auto params = hw.components[i].polynomial_parameters();
    if (!params || params->size() > 1) throw NotApplicable("component " + std::to_string(i + 1) + " is not of the form 1 + a u^-1");
    values.push_back(params->empty() ? Rational(0) : params->front());
  }
  LinearWeight w(hw.context, values);
  if (!(w.highest_weight().last == hw.last))
    throw NotApplicable("last component must be (u-1)/(u+lambda_{m+n}-1) for a linear weight");
  return w;
}

int run_check(const Options& o) {
  const HighestWeight hw = read_document(o.file).to_highest_weight();
  if (o.mode == "necessary") return emit(necessary_conditions(hw), o);
  if (o.mode == "osp22") {
    if (hw.context.sequence_string() != "10") throw NotApplicable("osp22 mode needs m = n = 1 with parity 10");
    Report r;
    r.command = "check osp22";
    const FdVerdict v = fd_criterion_osp22(hw.lambda(1), hw.lambda(2), hw.last);
    auto& c = r.add("f(u) = P(u+2)/P(u)", v.finite, "p = " + std::to_string(v.p) + ", f(u) = " + v.f.to_string());
    if (v.witness) c.witness("P", *v.witness);
    r.add("verdict symmetric under lambda_2 <-> lambda_2'", fd_symmetry_check(hw.lambda(1), hw.lambda(2), hw.last));
    return emit(r, o);
  }
  if (o.mode == "linear") {
    const LinearClassification cls = classify_linear(as_linear(hw));
    Report r;
    r.command = "check linear";
    r.add("finite-dimensional", cls.finite, cls.reason);
    json extra = json::object();
    if (cls.diagram) {
      extra["diagram"] = cls.diagram->rows;
      r.info["diagram"] = json(cls.diagram->rows).dump();
    }
    if (o.json_out) return emit(r, o, extra);
    return emit(r, o);
  }
  throw InvalidInput("--mode must be necessary, osp22 or linear");
}

int run_reflect(const Options& o) {
  const HighestWeight hw = read_document(o.file).to_highest_weight();
  const AlgebraContext& ctx = hw.context;
  std::string seq = ctx.sequence_string();
  HighestWeight out;
  if (o.kind == "A") {
    const int i = o.at ? o.at : ctx.m();
    if (i < 1 || i + 1 > ctx.rank() - 1)
      throw NotApplicable("type A reflection needs 1 <= i and i + 1 < m + n (got i = " + std::to_string(i) + ")");
    if (seq.substr(static_cast<std::size_t>(i - 1), 2) != "10")
      throw NotApplicable("parities at positions " + std::to_string(i) + ", " + std::to_string(i + 1) + " are not 1, 0");
    const OddReflection r = odd_reflection_A(hw.lambda(i), hw.lambda(i + 1));
    std::swap(seq[static_cast<std::size_t>(i - 1)], seq[static_cast<std::size_t>(i)]);
    auto comps = hw.components;
    comps[static_cast<std::size_t>(i - 1)] = r.first;
    comps[static_cast<std::size_t>(i)] = r.second;
    out = HighestWeight(AlgebraContext::from_parity(seq), comps, hw.last);
  } else if (o.kind == "osp22") {
    if (seq != "10") throw NotApplicable("the osp(2|2) reflection needs parity 10");
    const Osp22Reflection r = odd_reflection_osp22(hw.lambda(1), hw.lambda(2), hw.last);
    out = HighestWeight(AlgebraContext::from_parity("01"), {r.lambda1, r.lambda2}, r.lambda2p);
  } else if (o.kind == "chain") {
    const ChainResult c = chain_reflection(hw);
    const int m = ctx.m(), n = ctx.n();
    std::vector<FactoredSeries> comps(hw.components.begin(), hw.components.begin() + (m - 1));
    comps.insert(comps.end(), c.reflected.begin(), c.reflected.end());
    comps.push_back(c.lambda_m);
    comps.push_back(hw.lambda(m + n));
    const std::string s = std::string(static_cast<std::size_t>(m - 1), '1') + std::string(static_cast<std::size_t>(n - 1), '0') + "10";
    out = HighestWeight(AlgebraContext::from_parity(s), comps, hw.last);
    std::cerr << "chain branch: " << c.branch() << "\n";
  } else {
    throw InvalidInput("--kind must be A, osp22 or chain");
  }
  std::cout << io::document_json(io::WeightDocument::from_highest_weight(out)).dump(2) << "\n";
  return ok;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json_out, "JSON report on stdout");
  cmd->add_option("--order", o.order, "series truncation order K (<= 16)");
  cmd->add_option("--samples", o.samples, "number of sample pairs");
  cmd->add_option("--seed", o.seed, "seed for sample points");
  cmd->add_option("--max-dim", o.max_dim, "largest module dimension (env YOSP_MAX_DIM)");
  cmd->add_option("--max-rank", o.max_rank, "largest m + n");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  if (const char* env = std::getenv("YOSP_MAX_DIM")) {
    try {
      o.max_dim = std::stoul(env);
    } catch (const std::exception&) {
      std::cerr << "YOSP_MAX_DIM must be a positive integer\n";
      return usage;
    }
  }
  CLI::App app{"Exact checks for orthosymplectic Yangians and their highest weights"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "identity checks on explicit representations");
  verify->add_option("kind", o.kind, "ybe, rtt, center, gauss or iso")->required()->check(CLI::IsMember({"ybe", "rtt", "center", "gauss", "iso"}));
  verify->add_option("--m", o.m, "number of odd pairs");
  verify->add_option("--n", o.n, "number of even pairs");
  verify->add_option("--parity", o.parity, "parity sequence, e.g. 10");
  verify->add_option("--module", o.module, "vector or tensor (2-fold shifted)");
  verify->add_option("--e-scale", o.e_scale, "iso only: factor on the ebar_12, ebar_23 images");
  add_common(verify, o);

  auto* check = app.add_subcommand("check", "finite-dimensionality conditions for a weight document");
  check->add_option("file", o.file, "weight document (- for stdin)")->required();
  check->add_option("--mode", o.mode, "necessary, osp22 or linear")->required()->check(CLI::IsMember({"necessary", "osp22", "linear"}));
  add_common(check, o);

  auto* reflect = app.add_subcommand("reflect", "odd reflections of a weight document");
  reflect->add_option("file", o.file, "weight document (- for stdin)")->required();
  reflect->add_option("--kind", o.kind, "A, osp22 or chain")->required()->check(CLI::IsMember({"A", "osp22", "chain"}));
  reflect->add_option("--at", o.at, "A only: reflect positions i, i+1 (default m)");
  add_common(reflect, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    if (*verify) return run_verify(o);
    if (*check) return run_check(o);
    return run_reflect(o);
  } catch (const io::DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return data;
  } catch (const NotApplicable& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return not_applicable;
  } catch (const UnsupportedRoot& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return not_applicable;
  } catch (const ContextMismatch& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return not_applicable;
  } catch (const InvalidInput& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return not_applicable;
  }
}
