// reflen: reflection length and reflection factorizations in GL and GA.
//
//   reflen analyze [--affine] FILE
//   reflen factor [--affine] FILE
//   reflen check-reduced FILE
//   reflen classify FILE
//   reflen census KIND N P
//   reflen verify [--tuples] [--seed S] KIND N P
//
// FILE may be "-" for stdin. Exit codes: 0 success, 1 verification found
// disagreements, 2 input error, 3 domain error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "reflen/reflen.hpp"

namespace {

using reflen::oracle::Records;

constexpr int kExitDisagreement = 1;
constexpr int kExitInput = 2;
constexpr int kExitDomain = 3;

struct Options {
  std::string path;
  bool affine = false;
  bool porcelain = false;
  std::string kind;
  std::size_t n = 0;
  std::uint32_t p = 0;
  std::uint64_t cap = reflen::oracle::kDefaultCap;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 200;
  bool tuples = false;
};

reflen::MatrixFile read_input(const std::string& path) {
  if (path == "-") return reflen::parse_matrix_file(std::cin);
  std::ifstream in(path);
  if (!in) throw reflen::Error(reflen::Errc::Parse, "cannot open '" + path + "'");
  return reflen::parse_matrix_file(in);
}

reflen::Matrix read_single(const std::string& path) {
  reflen::MatrixFile f = read_input(path);
  if (f.matrices.size() != 1) {
    throw reflen::Error(reflen::Errc::Parse, "expected exactly one matrix, found " + std::to_string(f.matrices.size()));
  }
  return std::move(f.matrices.front());
}

void emit(const Records& records, bool porcelain) {
  std::cout << reflen::oracle::format_records(records, porcelain ? "=" : ": ");
}

std::string truth(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- analyze

Records analyze_linear(const reflen::Matrix& g) {
  const std::size_t length = reflen::reflection_length_gl(g);
  Records r{
      {"mode", "GL"},
      {"field", g.field().name()},
      {"n", std::to_string(g.rows())},
      {"length", std::to_string(length)},
      {"fixed_space", reflen::kernel_basis(reflen::minus_identity(g)).to_string()},
      {"moved_space", reflen::image_basis(reflen::minus_identity(g)).to_string()},
      {"reflection", truth(length == 1)},
  };
  if (length == 1) {
    const auto kind = reflen::classify_reflection(reflen::Reflection::from_matrix(g));
    r.emplace_back("reflection_kind", reflen::to_string(kind.type));
    r.emplace_back("determinant", kind.beta.to_string());
  }
  return r;
}

Records analyze_affine(const reflen::AffineMap& gg) {
  const reflen::ClassKind kind = reflen::classify(gg);
  const std::size_t length = reflen::reflection_length_affine(gg);
  return {
      {"mode", "GA"},
      {"field", gg.field().name()},
      {"n", std::to_string(gg.dim())},
      {"class", reflen::to_string(kind)},
      {"length", std::to_string(length)},
      {"dim_mov", std::to_string(*reflen::mov(gg).dim())},
      {"mov", reflen::mov(gg).to_string()},
      {"fix_aff", reflen::fix_aff(gg).to_string()},
      {"fix_lin", reflen::fix_lin(gg).to_string()},
      {"reflection", truth(reflen::is_affine_reflection(gg))},
  };
}

int cmd_analyze(const Options& o) {
  const reflen::Matrix m = read_single(o.path);
  emit(o.affine ? analyze_affine(reflen::AffineMap::from_block(m)) : analyze_linear(m), o.porcelain);
  return 0;
}

int cmd_classify(const Options& o) {
  const reflen::AffineMap gg = reflen::AffineMap::from_block(read_single(o.path));
  const reflen::ClassKind kind = reflen::classify(gg);
  emit({{"class", reflen::to_string(kind)},
        {"offset", std::to_string(reflen::offset(kind))},
        {"dim_mov", std::to_string(*reflen::mov(gg).dim())},
        {"length", std::to_string(reflen::reflection_length_affine(gg))}},
       o.porcelain);
  return 0;
}

// ---------------------------------------------------------------- factor

void emit_factors(const std::vector<reflen::Matrix>& factors, bool ok, bool porcelain) {
  if (porcelain) {
    Records r{{"length", std::to_string(factors.size())}};
    for (std::size_t i = 0; i < factors.size(); ++i) r.emplace_back("factor_" + std::to_string(i + 1), factors[i].to_string());
    r.emplace_back("product_check", ok ? "ok" : "FAILED");
    emit(r, true);
    return;
  }
  std::cout << "length: " << factors.size() << '\n';
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::cout << "factor " << (i + 1) << ":\n";
    const reflen::Matrix& f = factors[i];
    for (std::size_t r = 0; r < f.rows(); ++r) {
      std::cout << ' ';
      for (std::size_t c = 0; c < f.cols(); ++c) std::cout << ' ' << f(r, c).to_string();
      std::cout << '\n';
    }
  }
  std::cout << "product check: " << (ok ? "ok" : "FAILED") << '\n';
}

int cmd_factor(const Options& o) {
  const reflen::Matrix m = read_single(o.path);
  std::vector<reflen::Matrix> blocks;
  bool ok = false;
  if (o.affine) {
    const reflen::AffineMap gg = reflen::AffineMap::from_block(m);
    const auto factors = reflen::factor_minimal_affine(gg);
    for (const auto& f : factors) blocks.push_back(f.map().block());
    ok = reflen::compose(gg.field(), gg.dim(), factors) == gg && factors.size() == reflen::reflection_length_affine(gg);
  } else {
    const reflen::OrderedFactorization s = reflen::factor_minimal_gl(m);
    for (const auto& f : s.factors()) blocks.push_back(f.matrix());
    ok = s.product() == m && s.size() == reflen::reflection_length_gl(m);
  }
  emit_factors(blocks, ok, o.porcelain);
  return ok ? 0 : kExitDisagreement;
}

// ---------------------------------------------------------------- check-reduced

int cmd_check_reduced(const Options& o) {
  const reflen::MatrixFile f = read_input(o.path);
  std::vector<reflen::Reflection> factors;
  for (const auto& m : f.matrices) factors.push_back(reflen::Reflection::from_matrix(m));
  const reflen::OrderedFactorization s(std::move(factors));
  const reflen::FactorizationReport rep = reflen::report_factorization(s);
  emit({{"k", std::to_string(rep.k)},
        {"dim_moved", std::to_string(rep.vs_dim)},
        {"codim_fixed", std::to_string(rep.vs_codim)},
        {"reduced", rep.reduced ? "true" : "false"},
        {"length_by_criterion", rep.length_by_criterion ? std::to_string(*rep.length_by_criterion) : "indeterminate"},
        {"length", std::to_string(reflen::reflection_length_gl(rep.product))},
        {"product", rep.product.to_string()}},
       o.porcelain);
  return 0;
}

// ---------------------------------------------------------------- census / verify

int cmd_census(const Options& o) {
  const auto table = reflen::oracle::enumerate_group(reflen::oracle::parse_group_kind(o.kind), o.n, o.p, o.cap);
  emit(reflen::oracle::census(table).records(), o.porcelain);
  return 0;
}

/// Random elements beyond the enumerated group: factorizations must multiply
/// back, have the predicted length, and satisfy dim mov + dim fix_lin = n.
Records random_sweep(reflen::oracle::GroupKind kind, std::size_t n, reflen::Field field, std::uint64_t seed,
                     std::size_t samples, std::size_t& failures) {
  reflen::Rng rng(seed);
  failures = 0;
  std::optional<std::string> first;
  for (std::size_t i = 0; i < samples; ++i) {
    bool ok = true;
    std::string what;
    if (kind == reflen::oracle::GroupKind::GL) {
      const reflen::Matrix g = reflen::random_invertible(field, n, rng);
      const auto s = reflen::factor_minimal_gl(g);
      ok = s.product() == g && s.size() == reflen::reflection_length_gl(g) && reflen::is_reduced(s);
      what = g.to_string();
    } else {
      const reflen::AffineMap gg = reflen::random_affine(field, n, rng);
      const auto factors = reflen::factor_minimal_affine(gg);
      ok = reflen::compose(field, n, factors) == gg && factors.size() == reflen::reflection_length_affine(gg) &&
           *reflen::mov(gg).dim() + reflen::fix_lin(gg).dim() == n;
      what = gg.block().to_string();
    }
    if (!ok) {
      ++failures;
      if (!first) first = what;
    }
  }
  return {{"random_seed", std::to_string(seed)},
          {"random_samples", std::to_string(samples)},
          {"random_failures", std::to_string(failures)},
          {"random_first_failure", first.value_or("none")}};
}

int cmd_verify(const Options& o) {
  const auto kind = reflen::oracle::parse_group_kind(o.kind);
  const auto table = reflen::oracle::enumerate_group(kind, o.n, o.p, o.cap);
  reflen::oracle::VerifyOptions vo;
  vo.tuples = o.tuples;
  const auto report = reflen::oracle::verify_formulas(table, vo);
  Records r = report.records();
  std::size_t sweep_failures = 0;
  if (o.seed) {
    for (auto& rec : random_sweep(kind, o.n, reflen::Field::prime(o.p), *o.seed, o.samples, sweep_failures)) {
      r.push_back(std::move(rec));
    }
  }
  emit(r, o.porcelain);
  const bool clean = report.disagreements == 0 && report.tuple_counterexamples == 0 && sweep_failures == 0;
  return clean ? 0 : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reflection length and reflection factorizations in GL(V) and GA(V) over F_p and Q"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) { sub->add_flag("--porcelain", o.porcelain, "key=value output"); };
  auto add_file = [&](CLI::App* sub) { sub->add_option("file", o.path, "matrix file, or - for stdin")->required(); };
  auto add_group = [&](CLI::App* sub) {
    sub->add_option("kind", o.kind, "GL or GA")->required();
    sub->add_option("n", o.n, "dimension")->required()->check(CLI::PositiveNumber);
    sub->add_option("p", o.p, "prime")->required();
    sub->add_option("--cap", o.cap, "largest group order to enumerate");
  };

  auto* analyze = app.add_subcommand("analyze", "reflection length, fixed and moved spaces");
  add_file(analyze);
  add_common(analyze);
  analyze->add_flag("--affine", o.affine, "read an (n+1)x(n+1) affine block matrix");

  auto* factor = app.add_subcommand("factor", "a shortest reflection factorization");
  add_file(factor);
  add_common(factor);
  factor->add_flag("--affine", o.affine, "read an (n+1)x(n+1) affine block matrix");

  auto* check = app.add_subcommand("check-reduced", "test whether a tuple of reflections is reduced");
  add_file(check);
  add_common(check);

  auto* classify = app.add_subcommand("classify", "elliptic, parabolic or hyperbolic");
  add_file(classify);
  add_common(classify);

  auto* census = app.add_subcommand("census", "element counts of a small group");
  add_group(census);
  add_common(census);

  auto* verify = app.add_subcommand("verify", "compare closed-form lengths with breadth-first search");
  add_group(verify);
  add_common(verify);
  verify->add_flag("--tuples", o.tuples, "also check the reducedness criterion on reflection tuples of length <= 3");
  verify->add_option("--seed", o.seed, "also factor random elements drawn with this seed");
  verify->add_option("--samples", o.samples, "number of random elements for --seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*analyze) return cmd_analyze(o);
    if (*factor) return cmd_factor(o);
    if (*check) return cmd_check_reduced(o);
    if (*classify) return cmd_classify(o);
    if (*census) return cmd_census(o);
    if (*verify) return cmd_verify(o);
  } catch (const reflen::Error& e) {
    std::cerr << "reflen: " << reflen::errc_name(e.code()) << ": " << e.what() << '\n';
    return reflen::is_input_error(e.code()) ? kExitInput : kExitDomain;
  }
  return kExitInput;
}
