#include "rcq/poisson.hpp"

#include <array>
#include <set>

#include "rcq/linalg.hpp"

namespace rcq {

namespace {

using CrossedActor = Actor<CrossedElement, CrossedOps>;

const CrossedOps& ops() {
  static const CrossedOps o;
  return o;
}

CrossedElement mul(const CrossedElement& a, const CrossedElement& b) { return a * b; }

CrossedElement eval2(const Cochain& c, CrossedActor& left, CrossedActor& right) {
  CrossedElement r;
  for (const auto& [k, s] : c.terms()) r += left.apply(k[0]) * right.apply(k[1]) * s;
  return r;
}

H1Element y_poly(int a) { return H1Element::Y().pow(a); }

H1Element two_y_plus(int s) { return H1Element::Y() * Scalar(2) + H1Element(s); }

}  // namespace

CrossedElement evaluate_cochain(const Cochain& c, const std::vector<CrossedElement>& args) {
  if (static_cast<int>(args.size()) != c.rank()) throw InputError("cochain arity mismatch");
  std::vector<CrossedActor> actors;
  actors.reserve(args.size());
  for (const auto& a : args) actors.emplace_back(ops(), a);
  CrossedElement r;
  for (const auto& [k, s] : c.terms()) {
    CrossedElement v = actors[0].apply(k[0]);
    for (size_t i = 1; i < k.size(); ++i) v = v * actors[i].apply(k[i]);
    r += v * s;
  }
  return r;
}

Multilinear as_multilinear(const Cochain& c) {
  return [c](const std::vector<CrossedElement>& args) { return evaluate_cochain(c, args); };
}

Multilinear coboundary(const Multilinear& c, int degree) {
  return [c, degree](const std::vector<CrossedElement>& a) {
    if (static_cast<int>(a.size()) != degree + 1) throw InputError("coboundary arity mismatch");
    CrossedElement r = a[0] * c(std::vector<CrossedElement>(a.begin() + 1, a.end()));
    for (int i = 0; i < degree; ++i) {
      std::vector<CrossedElement> args(a.begin(), a.begin() + i);
      args.push_back(a[i] * a[i + 1]);
      args.insert(args.end(), a.begin() + i + 2, a.end());
      CrossedElement t = c(args);
      if (i % 2 == 0)
        r -= t;
      else
        r += t;
    }
    CrossedElement last = c(std::vector<CrossedElement>(a.begin(), a.end() - 1)) * a.back();
    if (degree % 2)
      r += last;
    else
      r -= last;
    return r;
  };
}

CrossedElement hochschild_b(const Cochain& c, const CrossedElement& a, const CrossedElement& b,
                            const CrossedElement& cc) {
  CrossedElement ab = a * b, bc = b * cc;
  CrossedActor xa(ops(), a), xb(ops(), b), xc(ops(), cc), xab(ops(), ab), xbc(ops(), bc);
  return a * eval2(c, xb, xc) - eval2(c, xab, xc) + eval2(c, xa, xbc) - eval2(c, xa, xb) * cc;
}

Cochain rc1_cochain() {
  H1Element x = H1Element::X(), y = H1Element::Y(), d1 = H1Element::delta(1);
  return H1Tensor::pure({-x, y * Scalar(2)}) + H1Tensor::pure({y * Scalar(2), x}) +
         H1Tensor::pure({d1 * y, y * Scalar(2)});
}

CrossedElement associator_defect(const CrossedElement& a, const CrossedElement& b, const CrossedElement& c) {
  Cochain rc = rc1_cochain();
  auto rc1 = [&](const CrossedElement& u, const CrossedElement& v) { return evaluate(rc, u, v, ops(), mul); };
  return rc1(rc1(a, b), c) - rc1(a, rc1(b, c));
}

Cochain b_prime() {
  H1Element sx = antipode(H1Element::X()), x = H1Element::X(), y = H1Element::Y();
  return H1Tensor::pure({sx * sx, y * two_y_plus(1)}) + H1Tensor::pure({sx * two_y_plus(1), x * two_y_plus(1)}) +
         H1Tensor::pure({y * two_y_plus(1), x * x});
}

std::vector<Cochain> b_identity_cochains() {
  H1Element d = H1Element::delta2_prime();
  return {H1Tensor::pure({d * y_poly(2), y_poly(1)}), H1Tensor::pure({d, y_poly(3)}),
          H1Tensor::pure({d * y_poly(1), y_poly(1)}), H1Tensor::pure({d, y_poly(2)}),
          H1Tensor::pure({d * y_poly(1), y_poly(2)})};
}

Cochain b_double_prime() {
  auto c = b_identity_cochains();
  return c[0] * Scalar(2) + c[1] * Scalar::ratio(2, 3) + c[4] * Scalar(2) + c[2] * Scalar(2) + c[3];
}

CrossedElement b_identity_rhs(int which, const CrossedElement& a, const CrossedElement& b, const CrossedElement& c) {
  // u a v(b) w(c) style expansion with explicit legs (left, right)
  static const std::array<std::pair<int, int>, 5> legs = {{{2, 1}, {0, 3}, {1, 1}, {0, 2}, {1, 2}}};
  if (which < 0 || which >= 5) throw InputError("b-identity index out of range");
  auto [ly, ry] = legs[which];
  H1Element left = H1Element::delta2_prime() * y_poly(ly), right = y_poly(ry);
  auto act1 = [](const H1Element& h, const CrossedElement& u) { return act(h, u, ops()); };
  return a * act1(left, b) * act1(right, c) - act1(left, a * b) * act1(right, c) +
         act1(left, a) * act1(right, b * c) - act1(left, a) * act1(right, b) * c;
}

AlgebraConfig affine_quadratic_config(int germ_order) {
  AlgebraConfig c;
  c.name = "affine+quadratic";
  DiffeoGerm q = DiffeoGerm::series({0, 1, 1}, germ_order);
  c.germs = {DiffeoGerm::identity(), DiffeoGerm::affine(2, 0), DiffeoGerm::affine(Scalar::ratio(1, 2), 0), q,
             q.inverse()};
  return c;
}

AlgebraConfig affine_config() {
  AlgebraConfig c;
  c.name = "affine";
  c.germs = {DiffeoGerm::identity(), DiffeoGerm::affine(2, 0), DiffeoGerm::affine(Scalar::ratio(1, 2), 0)};
  return c;
}

int Sampler::uniform(int lo, int hi) {
  if (hi < lo) throw InputError("empty sampling range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng_() % span);
}

CrossedElement Sampler::element(const AlgebraConfig& cfg) {
  CrossedElement r;
  int nterms = uniform(1, 2);
  for (int t = 0; t < nterms; ++t) {
    const DiffeoGerm& g = cfg.germs[uniform(0, static_cast<int>(cfg.germs.size()) - 1)];
    r.add(function(cfg.min_x1, cfg.max_x1, cfg.min_x2, cfg.max_x2), g);
  }
  return r;
}

LaurentPoly2 Sampler::function(int min_x1, int max_x1, int min_x2, int max_x2, int max_terms) {
  LaurentPoly2 f;
  int nmono = uniform(1, max_terms);
  for (int m = 0; m < nmono; ++m) {
    int c = uniform(1, 3) * (uniform(0, 1) ? 1 : -1);
    f += LaurentPoly2::monomial(uniform(min_x1, max_x1), uniform(min_x2, max_x2), c);
  }
  return f;
}

std::vector<Cochain> weight_two_basis(int max_y) {
  auto with_y = [&](std::vector<int> delta, int x) {
    std::vector<PbwMonomial> r;
    for (int a = 0; a <= max_y; ++a) r.push_back(PbwMonomial{delta, a, x});
    return r;
  };
  std::vector<PbwMonomial> w0 = with_y({}, 0);
  std::vector<PbwMonomial> w1 = with_y({}, 1), d1 = with_y({1}, 0);
  w1.insert(w1.end(), d1.begin(), d1.end());
  std::vector<PbwMonomial> w2;
  for (auto [delta, x] : std::vector<std::pair<std::vector<int>, int>>{{{}, 2}, {{1}, 1}, {{2}, 0}, {{1, 1}, 0}}) {
    auto v = with_y(delta, x);
    w2.insert(w2.end(), v.begin(), v.end());
  }
  std::vector<Cochain> out;
  auto push = [&](const std::vector<PbwMonomial>& l, const std::vector<PbwMonomial>& r) {
    for (const auto& a : l)
      for (const auto& b : r) {
        Cochain c(2);
        c.add_term({a, b}, Scalar(1));
        out.push_back(c);
      }
  };
  push(w0, w2);
  push(w1, w1);
  push(w2, w0);
  return out;
}

BoundingSolve solve_bounding_cochain(const std::vector<Cochain>& basis,
                                     const std::vector<std::array<CrossedElement, 3>>& triples) {
  int n = static_cast<int>(basis.size());
  EchelonSystem sys(n);
  for (const auto& t : triples) {
    const auto& [a, b, c] = t;
    CrossedElement ab = a * b, bc = b * c;
    CrossedActor xa(ops(), a), xb(ops(), b), xc(ops(), c), xab(ops(), ab), xbc(ops(), bc);
    std::vector<CrossedElement> cols;
    cols.reserve(n);
    for (const auto& e : basis)
      cols.push_back(a * eval2(e, xb, xc) - eval2(e, xab, xc) + eval2(e, xa, xbc) - eval2(e, xa, xb) * c);
    CrossedElement rhs = associator_defect(a, b, c);
    // common germs and the determined range of coefficients
    std::vector<DiffeoGerm> germs;
    auto note = [&](const CrossedElement& e) {
      for (const auto& term : e.terms()) {
        bool seen = false;
        for (const auto& g : germs)
          if (g == term.germ) seen = true;
        if (!seen) germs.push_back(term.germ);
      }
    };
    int prec = rhs.precision();
    note(rhs);
    for (const auto& col : cols) {
      note(col);
      prec = std::min(prec, col.precision());
    }
    for (const auto& g : germs) {
      std::set<LaurentPoly2::Exponent> keys;
      std::vector<LaurentPoly2> cf;
      for (const auto& col : cols) cf.push_back(col.coefficient(g));
      LaurentPoly2 r = rhs.coefficient(g);
      for (const auto& f : cf)
        for (const auto& [e, s] : f.terms()) keys.insert(e);
      for (const auto& [e, s] : r.terms()) keys.insert(e);
      for (const auto& e : keys) {
        if (e.first > prec) continue;
        Row row(n);
        for (int i = 0; i < n; ++i) row[i] = cf[i].coeff(e.first, e.second);
        sys.add(std::move(row), r.coeff(e.first, e.second));
      }
    }
  }
  BoundingSolve out;
  out.unknowns = n;
  out.rank = sys.rank();
  out.consistent = sys.consistent();
  if (out.consistent) {
    auto x = sys.solution();
    for (int i = 0; i < n; ++i)
      if (!x[i].is_zero()) out.b += basis[i] * x[i];
  }
  return out;
}

}  // namespace rcq
