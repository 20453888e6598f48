#include "motzkin/towers.hpp"

#include <sstream>

#include "motzkin/errors.hpp"
#include "motzkin/idempotents.hpp"

namespace motzkin {

QMatrix QMatrix::make(int nu) {
  if (nu < 3) throw DomainError("QMatrix: nu >= 3");
  QMatrix q;
  q.nu = nu;
  return q;
}

std::vector<Int> QMatrix::apply(const std::vector<Int>& v) const {
  const int n = size();
  std::vector<Int> out(n, Int(0));
  for (int i = 0; i < n; ++i) {
    Int acc = v[i];
    if (i > 0) acc += v[i - 1];
    if (i + 1 < n) acc += v[i + 1];
    out[i] = acc;
  }
  return out;
}

std::vector<Int> QMatrix::power_xi(int k) const {
  std::vector<Int> v(size(), Int(0));
  v[0] = 1;
  for (int i = 0; i < k; ++i) v = apply(v);
  return v;
}

QPoly QMatrix::det_i_minus_xq() const {
  // leading principal minors b_j of I - x Q satisfy
  // b_j = (1 - x) b_{j-1} - x^2 b_{j-2}
  QPoly one_minus_x({Rat(1), Rat(-1)});
  QPoly x2({Rat(0), Rat(0), Rat(1)});
  QPoly prev = QPoly::constant(Rat(1));  // b_0
  QPoly cur = one_minus_x;               // b_1
  for (int j = 2; j <= size(); ++j) {
    QPoly next = one_minus_x * cur - x2 * prev;
    prev = cur;
    cur = next;
  }
  return size() == 0 ? prev : cur;
}

std::vector<Int> block_dims(int k, const LoopParam& param) {
  if (k < 0) throw IndexOutOfRange("block_dims: k >= 0");
  // The represented algebra truncates at the first vanishing P_j(tau); for
  // RootOfUnity(nu) that is j = nu - 1, and among rationals only D = 2
  // (which is 1 + 2cos(pi/3)) truncates.
  int width = 0;  // 0: generic
  if (param.kind() == LoopParam::Kind::RootOfUnity) {
    width = param.nu() - 1;
  } else {
    auto P = ParamContext::make(param);
    for (int j = 1; j <= k + 1; ++j)
      if (chebyshev(j, P->tau).is_zero()) {
        width = j;
        break;
      }
  }
  if (width > 0) {
    auto v = QMatrix::make(width + 1).power_xi(k);
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
  }
  std::vector<Int> v(k + 1);
  for (int r = 0; r <= k; ++r) v[r] = count_paths(k, r);
  return v;
}

BratteliDiagram bratteli(const LoopParam& param, int depth) {
  if (depth < 1) throw IndexOutOfRange("bratteli: depth >= 1");
  BratteliDiagram b;
  b.param = param;
  for (int k = 0; k <= depth; ++k) b.levels.push_back(block_dims(k, param));
  for (int k = 0; k < depth; ++k) {
    int w0 = static_cast<int>(b.levels[k].size());
    int w1 = static_cast<int>(b.levels[k + 1].size());
    std::vector<std::vector<int>> inc(w0, std::vector<int>(w1, 0));
    for (int r = 0; r < w0; ++r)
      for (int s = 0; s < w1; ++s)
        if (std::abs(r - s) <= 1) inc[r][s] = 1;
    b.inclusions.push_back(std::move(inc));
  }
  return b;
}

std::string BratteliDiagram::dot() const {
  std::ostringstream os;
  os << "graph bratteli {\n  rankdir=TB;\n";
  for (size_t k = 0; k < levels.size(); ++k) {
    os << "  { rank=same;";
    for (size_t r = 0; r < levels[k].size(); ++r)
      os << " \"" << k << ":" << r << "\" [label=\"" << levels[k][r].get_str()
         << "\"];";
    os << " }\n";
  }
  for (size_t k = 0; k + 1 < levels.size(); ++k)
    for (size_t r = 0; r < levels[k].size(); ++r)
      for (size_t s = 0; s < levels[k + 1].size(); ++s)
        if (inclusions[k][r][s])
          os << "  \"" << k << ":" << r << "\" -- \"" << k + 1 << ":" << s
             << "\";\n";
  os << "}\n";
  return os.str();
}

std::string BratteliDiagram::json() const {
  std::ostringstream os;
  os << "{\"D\":\"" << param.str() << "\",\"levels\":[";
  for (size_t k = 0; k < levels.size(); ++k) {
    if (k) os << ",";
    os << "[";
    for (size_t r = 0; r < levels[k].size(); ++r) {
      if (r) os << ",";
      os << levels[k][r].get_str();
    }
    os << "]";
  }
  os << "],\"inclusions\":[";
  for (size_t k = 0; k < inclusions.size(); ++k) {
    if (k) os << ",";
    os << "[";
    for (size_t r = 0; r < inclusions[k].size(); ++r) {
      if (r) os << ",";
      os << "[";
      for (size_t s = 0; s < inclusions[k][r].size(); ++s) {
        if (s) os << ",";
        os << inclusions[k][r][s];
      }
      os << "]";
    }
    os << "]";
  }
  os << "]}";
  return os.str();
}

std::vector<Scalar> weight_vector(int k, const ParamPtr& P) {
  if (k < 1) throw IndexOutOfRange("weight_vector: k >= 1");
  // The vector truncates at the first vanishing P_i(tau): that block and
  // everything past it is invisible to the trace.  This covers both the
  // RootOfUnity truncation at nu - 1 entries and rational parameters like
  // D = 2 = 1 + 2cos(pi/3).
  std::vector<Scalar> w;
  Scalar dk = P->D.pow(-static_cast<long>(k));
  for (int i = 0; i <= k; ++i) {
    Scalar entry = P->d.pow(i) * chebyshev(i, P->tau) * dk;
    if (entry.is_zero()) break;
    w.push_back(std::move(entry));
  }
  return w;
}

Int gns_dim(int j, const ParamPtr& P, int bound) {
  if (j < 0) throw IndexOutOfRange("gns_dim: j >= 0");
  return Int(gram_rank(gram(j / 2, j - j / 2, P, bound)));
}

Int dim_closed_form(int k, int nu) {
  if (k < 0 || nu < 3) throw IndexOutOfRange("dim_closed_form: k >= 0, nu >= 3");
  return QMatrix::make(nu).power_xi(k)[0];
}

std::vector<Int> gf_coefficients(int nu, int N) {
  if (N < 0) throw IndexOutOfRange("gf_coefficients: N >= 0");
  QMatrix q = QMatrix::make(nu);
  QPoly det = q.det_i_minus_xq();
  const int deg = det.degree();
  // det(I - xQ) * h(x) is the (1,1) cofactor, of degree <= size - 1, so the
  // recurrence sum_i det_i h_{j-i} = 0 holds from j = size on (det itself
  // can degenerate below full degree when Q is singular)
  const int start = q.size();
  std::vector<Int> h;
  for (int j = 0; j <= N && j < start; ++j) h.push_back(q.power_xi(j)[0]);
  for (int j = start; j <= N; ++j) {
    Rat acc(0);
    for (int i = 1; i <= deg && i <= j; ++i) acc -= det[i] * Rat(h[j - i]);
    if (acc.get_den() != 1)
      throw MotzkinError("gf_coefficients: non-integer coefficient");
    h.push_back(Int(acc.get_num()));
  }
  return h;
}

GfComparison gf_chebyshev_comparison(int nu, int N) {
  GfComparison cmp;
  cmp.resolvent = gf_coefficients(nu, N);
  // series of P_{nu-1}(x) / P_nu(x) by long division
  QPoly num = QPoly::constant(Rat(1)), den = num;  // P_0, P_1
  QPoly x = QPoly::x();
  for (int j = 1; j < nu; ++j) {
    QPoly next = den - x * num;
    num = den;
    den = next;
  }
  std::vector<Rat> series(N + 1, Rat(0));
  std::vector<Rat> rem(N + 1, Rat(0));
  for (int i = 0; i <= std::min(N, num.degree()); ++i) rem[i] = num[i];
  for (int j = 0; j <= N; ++j) {
    Rat c = rem[j] / den[0];
    series[j] = c;
    for (int i = 0; i <= den.degree() && j + i <= N; ++i)
      rem[j + i] -= c * den[i];
  }
  cmp.chebyshev_ratio = std::move(series);
  for (int j = 0; j <= N; ++j) {
    if (Rat(cmp.resolvent[j]) != cmp.chebyshev_ratio[j]) {
      cmp.first_mismatch = j;
      break;
    }
  }
  return cmp;
}

CommutantTable commutant_table(int k, const Rat& D) {
  if (k < 1) throw IndexOutOfRange("commutant_table: k >= 1");
  if (D < 3) throw DomainError("commutant_table: D >= 3 (q must be real)");
  CommutantTable table;
  table.k = k;
  table.D = D;
  Rat d = D - 1;
  Rat radicand = d * d - 4;
  auto base = ParamContext::make(LoopParam::rational(D));
  Rat root;
  if (try_rational_sqrt(radicand, root)) {
    table.field = base;
    table.q = base->scalar((d + root) / 2);
  } else {
    table.field = base->extend_sqrt(base->scalar(radicand));
    table.q = (table.field->scalar(d) + Scalar::sqrt_generator(table.field->F)) /
              table.field->scalar(2);
  }
  const ParamPtr& P = table.field;
  Scalar qv = table.q;
  Scalar norm = (P->scalar(1) + qv + qv.inverse()).pow(k - 1).inverse();
  Scalar d_power_norm =
      (P->scalar(1 + D) + P->scalar(D).inverse()).pow(k - 1).inverse();
  for (int i = k - 1; i >= 0; --i) {
    for (int j = k - 1 - i; j >= 0; --j) {
      int l = k - 1 - i - j;
      CommutantBlock b;
      b.i = i;
      b.j = j;
      b.l = l;
      // trinomial (k-1)! / (i! j! l!)
      b.dim = binom(k - 1, i) * binom(k - 1 - i, j);
      b.weight = qv.pow(j - l) * norm;
      b.d_power_weight = P->scalar(D).pow(j - l) * d_power_norm;
      table.blocks.push_back(std::move(b));
    }
  }
  if (static_cast<int>(table.blocks.size()) != k * (k + 1) / 2)
    throw MotzkinError("commutant_table: block count is not k(k+1)/2");
  Scalar sum = Scalar::zero(P->F);
  for (const auto& b : table.blocks) sum += P->scalar(Rat(b.dim)) * b.weight;
  if (!sum.is_one())
    throw MotzkinError("commutant_table: weights do not sum to 1");
  return table;
}

Int CommutantTable::dim_total() const {
  Int acc = 0;
  for (const auto& b : blocks) acc += b.dim * b.dim;
  return acc;
}

Scalar index_report(int k, const ParamPtr& P) {
  if (k < 0) throw IndexOutOfRange("index_report: k >= 0");
  return P->D.pow(2L * k);
}

Int commutant_dim_root(int k, int nu) {
  if (k < 1) throw IndexOutOfRange("commutant_dim_root: k >= 1");
  Int acc = 0;
  for (const auto& v : block_dims(k - 1, LoopParam::root_of_unity(nu)))
    acc += v * v;
  return acc;
}

}  // namespace motzkin
