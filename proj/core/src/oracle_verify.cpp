#include <algorithm>
#include <sstream>
#include <thread>

#include "oracle_detail.hpp"
#include "reflen/affine.hpp"
#include "reflen/error.hpp"
#include "reflen/gl_factor.hpp"
#include "reflen/oracle.hpp"
#include "reflen/reflection.hpp"

namespace reflen::oracle {

namespace {

using Point = std::array<std::uint32_t, kMaxSide>;

std::size_t power(std::uint32_t p, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= p;
  return r;
}

/// e such that p^e == count; counts here are always sizes of affine subspaces.
std::size_t log_p(std::size_t count, std::uint32_t p) {
  std::size_t e = 0;
  while (count > 1) {
    if (count % p != 0) throw std::logic_error("set size is not a power of p");
    count /= p;
    ++e;
  }
  return e;
}

Point decode(std::size_t code, std::size_t n, std::uint32_t p) {
  Point x{};
  for (std::size_t j = n; j-- > 0;) {
    x[j] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return x;
}

std::size_t encode(const Point& x, std::size_t n, std::uint32_t p) {
  std::size_t code = 0;
  for (std::size_t j = 0; j < n; ++j) code = code * p + x[j];
  return code;
}

Point difference(const Point& a, const Point& b, std::size_t n, std::uint32_t p) {
  Point d{};
  for (std::size_t j = 0; j < n; ++j) d[j] = (a[j] + p - b[j]) % p;
  return d;
}

/// Runs body(id) for every element across worker threads and returns the
/// per-id results in id order.
template <typename Result, typename Body>
std::vector<Result> parallel_map(std::size_t count, unsigned workers, Body body) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  std::vector<Result> out(count);
  if (workers <= 1) {
    for (std::size_t id = 0; id < count; ++id) out[id] = body(id);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        const std::size_t lo = w * chunk;
        const std::size_t hi = std::min(count, lo + chunk);
        for (std::size_t id = lo; id < hi; ++id) out[id] = body(id);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

Geometry brute_force_geometry(const GroupTable& table, std::size_t id) {
  if (table.kind() != GroupKind::GA) throw Error(Errc::DimensionMismatch, "brute_force_geometry needs a GA table");
  const std::size_t n = table.n();
  const std::size_t side = table.side();
  const std::uint32_t p = table.p();
  const Entries& e = table.element(id);
  const std::size_t points = power(p, n);

  auto linear = [&](const Point& x) {
    Point y{};
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t acc = 0;
      for (std::size_t j = 0; j < n; ++j) acc += std::uint64_t{e[i * side + j]} * x[j];
      y[i] = static_cast<std::uint32_t>(acc % p);
    }
    return y;
  };
  auto affine = [&](const Point& x) {
    Point y = linear(x);
    for (std::size_t i = 0; i < n; ++i) y[i] = (y[i] + e[i * side + n]) % p;
    return y;
  };

  std::vector<char> fixed_vector(points, 0);
  std::vector<char> motion_seen(points, 0);
  std::size_t fixed_count = 0;
  std::size_t motion_count = 0;
  bool fixes_point = false;
  std::vector<Point> image(points);
  for (std::size_t code = 0; code < points; ++code) {
    const Point x = decode(code, n, p);
    if (linear(x) == x) {
      fixed_vector[code] = 1;
      ++fixed_count;
    }
    image[code] = affine(x);
    if (image[code] == x) fixes_point = true;
    const std::size_t motion = encode(difference(image[code], x, n, p), n, p);
    if (!motion_seen[motion]) {
      motion_seen[motion] = 1;
      ++motion_count;
    }
  }

  Geometry geo{log_p(motion_count, p), log_p(fixed_count, p), fixes_point, ClassKind::Elliptic};
  if (fixes_point) return geo;

  // Hyperbolic when, for every point a, the cosets a + fix_lin and
  // gg(a) + fix_lin together cover every point.
  bool covers_everywhere = true;
  for (std::size_t a = 0; a < points && covers_everywhere; ++a) {
    const Point pa = decode(a, n, p);
    for (std::size_t y = 0; y < points; ++y) {
      const Point py = decode(y, n, p);
      if (fixed_vector[encode(difference(py, pa, n, p), n, p)]) continue;
      if (fixed_vector[encode(difference(py, image[a], n, p), n, p)]) continue;
      covers_everywhere = false;
      break;
    }
  }
  geo.kind = covers_everywhere ? ClassKind::Hyperbolic : ClassKind::Parabolic;
  return geo;
}

// ---------------------------------------------------------------- verify

namespace {

struct ElementCheck {
  bool ok = true;
  std::string detail;
};

ElementCheck check_gl(const GroupTable& table, const LengthTable& lengths, std::size_t id) {
  const std::size_t formula = reflection_length_gl(table.to_matrix(id));
  const int bfs = lengths.length[id];
  if (bfs >= 0 && static_cast<std::size_t>(bfs) == formula) return {};
  std::ostringstream out;
  out << "element " << table.format(id) << ": bfs length " << bfs << ", rank formula " << formula;
  return {false, out.str()};
}

ElementCheck check_ga(const GroupTable& table, const LengthTable& lengths, std::size_t id) {
  const AffineMap gg = table.to_affine(id);
  const Geometry geo = brute_force_geometry(table, id);
  const std::size_t formula = reflection_length_affine(gg);
  const ClassKind kind = classify(gg);
  const std::size_t mov_dim = *mov(gg).dim();
  const int bfs = lengths.length[id];
  const bool ok = bfs >= 0 && static_cast<std::size_t>(bfs) == formula && kind == geo.kind && mov_dim == geo.mov_dim;
  if (ok) return {};
  std::ostringstream out;
  out << "element " << table.format(id) << ": bfs length " << bfs << ", formula " << formula << ", class "
      << to_string(kind) << " (points say " << to_string(geo.kind) << "), dim mov " << mov_dim << " (points say "
      << geo.mov_dim << ")";
  return {false, out.str()};
}

void check_tuples(const GroupTable& table, const LengthTable& lengths, const std::vector<std::size_t>& gens,
                  std::size_t max_k, VerificationReport& report) {
  // GA reflections enter as their (n+1)x(n+1) block matrices, which are
  // reflections of GL_{n+1}.
  std::vector<Reflection> as_reflections;
  as_reflections.reserve(gens.size());
  for (const std::size_t g : gens) as_reflections.push_back(Reflection::from_matrix(table.to_matrix(g)));

  report.tuples_checked = true;
  for (std::size_t k = 1; k <= max_k; ++k) {
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      std::size_t product = table.identity();
      std::vector<Reflection> factors;
      for (const std::size_t i : idx) {
        product = table.multiply(product, gens[i]);
        factors.push_back(as_reflections[i]);
      }
      const OrderedFactorization s(std::move(factors));
      const bool reduced = is_reduced(s);
      const bool shortest = lengths.length[product] == static_cast<int>(k);
      bool ok = reduced == shortest;
      if (table.kind() == GroupKind::GL) ok = ok && reduced == (reflection_length_gl(s.product()) == k);
      ++report.tuples;
      if (!ok) {
        ++report.tuple_counterexamples;
        if (!report.first_tuple_counterexample) {
          std::ostringstream out;
          out << "tuple";
          for (const std::size_t i : idx) out << ' ' << table.format(gens[i]);
          out << ": k " << k << ", bfs length of product " << lengths.length[product] << ", is_reduced "
              << yes_no(reduced);
          report.first_tuple_counterexample = out.str();
        }
      }
      // Odometer over reflection indices.
      std::size_t pos = k;
      while (pos > 0 && ++idx[pos - 1] == gens.size()) idx[--pos] = 0;
      if (pos == 0) break;
    }
  }
}

}  // namespace

VerificationReport verify_formulas(const GroupTable& table, const VerifyOptions& options) {
  const std::vector<std::size_t> gens = reflections_of(table);
  if (gens.empty()) {
    throw Error(Errc::NoReflections, std::string(to_string(table.kind())) + "_" + std::to_string(table.n()) + "(F" +
                                         std::to_string(table.p()) +
                                         ") has no reflections; only the identity is a product of reflections");
  }
  const LengthTable lengths = bfs_lengths(table, gens);

  VerificationReport report{};
  report.kind = table.kind();
  report.n = table.n();
  report.p = table.p();
  report.elements = table.size();
  report.reflections = gens.size();
  report.unreachable = lengths.unreachable_count();

  const auto checks = parallel_map<ElementCheck>(table.size(), options.workers, [&](std::size_t id) {
    return table.kind() == GroupKind::GL ? check_gl(table, lengths, id) : check_ga(table, lengths, id);
  });
  for (const auto& c : checks) {
    if (c.ok) {
      ++report.agreements;
    } else {
      ++report.disagreements;
      if (!report.first_counterexample) report.first_counterexample = c.detail;
    }
  }

  if (options.tuples) check_tuples(table, lengths, gens, options.max_tuple_length, report);
  return report;
}

Records VerificationReport::records() const {
  Records r{
      {"group", std::string(to_string(kind)) + "_" + std::to_string(n) + "(F" + std::to_string(p) + ")"},
      {"elements", std::to_string(elements)},
      {"reflections", std::to_string(reflections)},
      {"unreachable", std::to_string(unreachable)},
      {"agreements", std::to_string(agreements)},
      {"disagreements", std::to_string(disagreements)},
      {"first_counterexample", first_counterexample.value_or("none")},
  };
  if (tuples_checked) {
    r.emplace_back("tuples", std::to_string(tuples));
    r.emplace_back("tuple_counterexamples", std::to_string(tuple_counterexamples));
    r.emplace_back("first_tuple_counterexample", first_tuple_counterexample.value_or("none"));
  }
  return r;
}

// ---------------------------------------------------------------- census

CensusReport census(const GroupTable& table) {
  const std::vector<std::size_t> gens = reflections_of(table);
  const LengthTable lengths = bfs_lengths(table, gens);

  CensusReport c{};
  c.kind = table.kind();
  c.n = table.n();
  c.p = table.p();
  c.order = table.size();
  c.reflections = gens.size();
  c.unreachable = lengths.unreachable_count();
  c.length_counts.assign(static_cast<std::size_t>(std::max(lengths.max_length(), 0)) + 1, 0);
  for (const int len : lengths.length) {
    if (len >= 0) ++c.length_counts[static_cast<std::size_t>(len)];
  }

  const std::size_t side = table.side();
  const std::uint32_t p = table.p();
  if (table.kind() == GroupKind::GL) {
    for (const std::size_t g : gens) {
      // Transvections are the reflections with (M - I)^2 = 0.
      const Entries d = detail::minus_identity(table.element(g), side, p);
      const Entries d2 = detail::multiply(d, d, side, p);
      const bool transvection = std::all_of(d2.begin(), d2.begin() + static_cast<std::ptrdiff_t>(side * side),
                                            [](std::uint16_t x) { return x == 0; });
      ++(transvection ? c.transvections : c.semisimple_reflections);
    }
    return c;
  }

  std::vector<char> is_reflection(table.size(), 0);
  for (const std::size_t g : gens) is_reflection[g] = 1;
  const std::size_t n = table.n();
  for (std::size_t id = 0; id < table.size(); ++id) {
    const Geometry geo = brute_force_geometry(table, id);
    switch (geo.kind) {
      case ClassKind::Elliptic: ++c.elliptic; break;
      case ClassKind::Parabolic: ++c.parabolic; break;
      case ClassKind::Hyperbolic: ++c.hyperbolic; break;
    }
    const bool translation = geo.fix_lin_dim == n && id != table.identity();
    if (translation) ++c.translations;
    if (geo.kind == ClassKind::Hyperbolic && !translation) ++c.hyperbolic_non_translation;
    if (geo.fixes_point && id != table.identity() && !is_reflection[id]) {
      ++c.point_fixing_non_reflections;
      if (geo.kind == ClassKind::Parabolic) ++c.point_fixing_non_reflections_parabolic;
    }
  }
  return c;
}

Records CensusReport::records() const {
  Records r{
      {"group", std::string(to_string(kind)) + "_" + std::to_string(n) + "(F" + std::to_string(p) + ")"},
      {"order", std::to_string(order)},
      {"reflections", std::to_string(reflections)},
      {"unreachable", std::to_string(unreachable)},
  };
  for (std::size_t len = 0; len < length_counts.size(); ++len) {
    r.emplace_back("length_" + std::to_string(len), std::to_string(length_counts[len]));
  }
  if (kind == GroupKind::GL) {
    r.emplace_back("semisimple_reflections", std::to_string(semisimple_reflections));
    r.emplace_back("transvections", std::to_string(transvections));
    return r;
  }
  r.emplace_back("elliptic", std::to_string(elliptic));
  r.emplace_back("parabolic", std::to_string(parabolic));
  r.emplace_back("hyperbolic", std::to_string(hyperbolic));
  r.emplace_back("translations", std::to_string(translations));
  r.emplace_back("hyperbolic_non_translation", std::to_string(hyperbolic_non_translation));
  r.emplace_back("point_fixing_non_reflections", std::to_string(point_fixing_non_reflections));
  r.emplace_back("point_fixing_non_reflections_parabolic", std::to_string(point_fixing_non_reflections_parabolic));
  if (point_fixing_non_reflections > 0 && point_fixing_non_reflections_parabolic == 0) {
    r.emplace_back("note", "point-fixing non-reflections are all elliptic (each fixes a point), so none of them is parabolic");
  }
  if (reflections == 0) r.emplace_back("degenerate", "no reflections; only the identity is a product of reflections");
  return r;
}

std::string format_records(const Records& records, std::string_view sep) {
  std::string out;
  for (const auto& [key, value] : records) {
    out += key;
    out += sep;
    out += value;
    out += '\n';
  }
  return out;
}

}  // namespace reflen::oracle
