#include "motzkin/algebra.hpp"

#include <sstream>
#include <thread>
#include <unordered_map>

#include "motzkin/errors.hpp"

namespace motzkin {

AlgElem AlgElem::from_tangle(const ParamPtr& P, const Tangle& t,
                             const Scalar& coeff) {
  AlgElem e(P, t.top(), t.bottom());
  if (!coeff.is_zero()) e.terms_.emplace(t, coeff);
  return e;
}

AlgElem AlgElem::from_tangle(const ParamPtr& P, const Tangle& t) {
  return from_tangle(P, t, Scalar::one(P->F));
}

AlgElem AlgElem::identity(const ParamPtr& P, int n) {
  return from_tangle(P, Tangle::identity(n));
}

AlgElem AlgElem::zero(const ParamPtr& P, int top, int bottom) {
  return AlgElem(P, top, bottom);
}

AlgElem AlgElem::gen(const ParamPtr& P, GenKind kind, int n, int i) {
  return from_tangle(P, generator(kind, n, i));
}

Scalar AlgElem::coeff(const Tangle& t) const {
  auto it = terms_.find(t);
  return it == terms_.end() ? Scalar::zero(P_->F) : it->second;
}

void AlgElem::add_term(const Tangle& t, const Scalar& c) {
  if (t.top() != top_ || t.bottom() != bottom_)
    throw ShapeMismatch("add_term: tangle shape differs from element shape");
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(t, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

AlgElem AlgElem::operator+(const AlgElem& o) const {
  if (top_ != o.top_ || bottom_ != o.bottom_)
    throw ShapeMismatch("add: shapes differ");
  AlgElem r = *this;
  for (const auto& [t, c] : o.terms_) r.add_term(t, c);
  return r;
}

AlgElem AlgElem::operator-(const AlgElem& o) const {
  if (top_ != o.top_ || bottom_ != o.bottom_)
    throw ShapeMismatch("sub: shapes differ");
  AlgElem r = *this;
  for (const auto& [t, c] : o.terms_) r.add_term(t, -c);
  return r;
}

AlgElem AlgElem::operator-() const {
  AlgElem r(P_, top_, bottom_);
  for (const auto& [t, c] : terms_) r.terms_.emplace(t, -c);
  return r;
}

AlgElem AlgElem::operator*(const Scalar& s) const {
  AlgElem r(P_, top_, bottom_);
  if (s.is_zero()) return r;
  for (const auto& [t, c] : terms_) r.terms_.emplace(t, c * s);
  return r;
}

bool AlgElem::operator==(const AlgElem& o) const {
  return top_ == o.top_ && bottom_ == o.bottom_ && terms_ == o.terms_;
}

namespace {

using Accum = std::unordered_map<Tangle, Scalar, TangleHash>;

void multiply_block(const std::vector<const std::pair<const Tangle, Scalar>*>& xs,
                    size_t lo, size_t hi, const AlgElem& y,
                    const std::vector<Scalar>& dpow, Accum& acc) {
  for (size_t ix = lo; ix < hi; ++ix) {
    const auto& [tx, cx] = *xs[ix];
    for (const auto& [ty, cy] : y.terms()) {
      auto [tz, loops] = multiply_tangles(tx, ty);
      Scalar c = cx * cy;
      if (loops) c *= dpow[loops];
      auto it = acc.find(tz);
      if (it == acc.end())
        acc.emplace(std::move(tz), std::move(c));
      else
        it->second += c;
    }
  }
}

}  // namespace

AlgElem AlgElem::operator*(const AlgElem& o) const {
  if (bottom_ != o.top_)
    throw ShapeMismatch("multiply: inner shapes differ (" +
                        std::to_string(bottom_) + " vs " +
                        std::to_string(o.top_) + ")");
  AlgElem r(P_, top_, o.bottom_);
  if (terms_.empty() || o.terms_.empty()) return r;

  const int max_loops = bottom_ + 1;
  std::vector<Scalar> dpow(max_loops + 1, Scalar::one(P_->F));
  for (int i = 1; i <= max_loops; ++i) dpow[i] = dpow[i - 1] * P_->D;

  std::vector<const std::pair<const Tangle, Scalar>*> xs;
  xs.reserve(terms_.size());
  for (const auto& kv : terms_) xs.push_back(&kv);

  const size_t pairs = terms_.size() * o.terms_.size();
  unsigned nthreads = 1;
  if (pairs > 2'000'000) {
    nthreads = std::min<unsigned>(std::thread::hardware_concurrency(),
                                  static_cast<unsigned>(xs.size()));
    if (nthreads == 0) nthreads = 1;
  }

  if (nthreads <= 1) {
    Accum acc;
    acc.reserve(pairs < 4096 ? pairs : 4096);
    multiply_block(xs, 0, xs.size(), o, dpow, acc);
    for (auto& [t, c] : acc)
      if (!c.is_zero()) r.terms_.emplace(t, std::move(c));
    return r;
  }

  std::vector<Accum> parts(nthreads);
  std::vector<std::thread> workers;
  const size_t chunk = (xs.size() + nthreads - 1) / nthreads;
  for (unsigned w = 0; w < nthreads; ++w) {
    size_t lo = w * chunk, hi = std::min(xs.size(), lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([&, lo, hi, w] {
      multiply_block(xs, lo, hi, o, dpow, parts[w]);
    });
  }
  for (auto& t : workers) t.join();
  // exact addition is associative and commutative, so the merge order
  // cannot change the result
  std::map<Tangle, Scalar> merged;
  for (auto& part : parts)
    for (auto& [t, c] : part) {
      auto it = merged.find(t);
      if (it == merged.end())
        merged.emplace(t, std::move(c));
      else
        it->second += c;
    }
  for (auto& [t, c] : merged)
    if (!c.is_zero()) r.terms_.emplace(t, std::move(c));
  return r;
}

AlgElem AlgElem::star() const {
  AlgElem r(P_, bottom_, top_);
  for (const auto& [t, c] : terms_) r.terms_.emplace(t.adjoint(), c);
  return r;
}

Scalar AlgElem::trace() const {
  if (top_ != bottom_) throw ShapeMismatch("trace: element is not square");
  Scalar acc = Scalar::zero(P_->F);
  Scalar dinv_n = P_->D.pow(-static_cast<long>(top_));
  for (const auto& [t, c] : terms_) {
    int loops = closure_loops(t);
    acc += c * P_->D.pow(loops);
  }
  return acc * dinv_n;
}

AlgElem AlgElem::cond_expect() const {
  if (top_ != bottom_)
    throw ShapeMismatch("cond_expect: element is not square");
  if (top_ < 1) throw ShapeMismatch("cond_expect: n must be >= 1");
  AlgElem r(P_, top_ - 1, bottom_ - 1);
  Scalar dinv = P_->D.inverse();
  for (const auto& [t, c] : terms_) {
    auto [tz, loops] = close_last_column(t);
    r.add_term(tz, c * P_->D.pow(loops) * dinv);
  }
  return r;
}

AlgElem AlgElem::extend(int t) const {
  if (t < 0) throw IndexOutOfRange("extend: negative count");
  if (t == 0) return *this;
  AlgElem r(P_, top_ + t, bottom_ + t);
  Tangle id_t = Tangle::identity(t);
  for (const auto& [tt, c] : terms_) r.terms_.emplace(tt.juxtapose(id_t), c);
  return r;
}

AlgElem AlgElem::juxtapose(const AlgElem& right) const {
  AlgElem r(P_, top_ + right.top_, bottom_ + right.bottom_);
  for (const auto& [tx, cx] : terms_)
    for (const auto& [ty, cy] : right.terms_)
      r.add_term(tx.juxtapose(ty), cx * cy);
  return r;
}

AlgElem AlgElem::lift_to(const ParamPtr& Q) const {
  AlgElem r(Q, top_, bottom_);
  for (const auto& [t, c] : terms_) r.terms_.emplace(t, c.lift_to(Q->F));
  return r;
}

Scalar pairing(const AlgElem& x, const AlgElem& y) {
  if (x.top() != y.top() || x.bottom() != y.bottom())
    throw ShapeMismatch("pairing: shapes differ");
  const auto& P = x.param();
  // tr(y* x) with the slice normalization D^{-max(m,n)}; computed as the
  // full closure of x against y*, which is the same contraction either way
  // the odd shape is sliced.
  Scalar acc = Scalar::zero(P->F);
  const int m = x.top(), n = x.bottom();
  for (const auto& [tx, cx] : x.terms()) {
    for (const auto& [ty, cy] : y.terms()) {
      // identify tx and ty point-to-point (ty mirrored)
      std::vector<std::pair<int, int>> idents(tx.points());
      for (int i = 0; i < tx.points(); ++i) idents[i] = {i, tx.points() + i};
      int loops = contract(tx, &ty, idents, {}, {}).loops;
      acc += cx * cy * P->D.pow(loops);
    }
  }
  return acc * P->D.pow(-static_cast<long>(std::max(m, n)));
}

std::string AlgElem::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*[" << t.compact() << "]";
  }
  return os.str();
}

std::string AlgElem::json() const {
  std::ostringstream os;
  os << "{\"top\":" << top_ << ",\"bottom\":" << bottom_ << ",\"terms\":[";
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << "{\"tangle\":" << t.json() << ",\"coeff\":" << c.json() << "}";
  }
  os << "]}";
  return os.str();
}

}  // namespace motzkin
