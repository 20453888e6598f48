#include "motzkin/tangle.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <sstream>

#include "json.hpp"
#include "motzkin/errors.hpp"

namespace motzkin {

namespace {

// circular position of flat point i in an (m,n) tangle
// (order T1..Tm, Bn..B1)
inline int circ_of_flat(int i, int m, int n) {
  return i < m ? i : 2 * m + n - 1 - i;
}
inline int flat_of_circ(int c, int m, int n) {
  return c < m ? c : 2 * m + n - 1 - c;
}

}  // namespace

Tangle::Tangle(int top, int bottom, std::vector<int16_t> partner)
    : top_(top), bottom_(bottom), p_(std::move(partner)) {
  validate();
}

void Tangle::validate() const {
  if (top_ < 0 || bottom_ < 0 ||
      p_.size() != static_cast<size_t>(top_ + bottom_))
    throw MotzkinError("tangle: bad point count");
  const int n = points();
  for (int i = 0; i < n; ++i) {
    int j = p_[i];
    if (j == -1) continue;
    if (j < 0 || j >= n || j == i || p_[j] != i)
      throw MotzkinError("tangle: pairing is not a partial involution");
  }
  // non-crossing in the circular order: standard stack check
  std::array<int16_t, 160> stack;
  int sp = 0;
  for (int c = 0; c < n; ++c) {
    int i = flat_of_circ(c, top_, bottom_);
    if (p_[i] == -1) continue;
    int pc = circ_of_flat(p_[i], top_, bottom_);
    if (pc > c) {
      stack[sp++] = static_cast<int16_t>(i);
    } else {
      if (sp == 0 || stack[sp - 1] != p_[i])
        throw MotzkinError("tangle: crossing strands");
      --sp;
    }
  }
}

Tangle Tangle::all_isolated(int top, int bottom) {
  Tangle t;
  t.top_ = top;
  t.bottom_ = bottom;
  t.p_.assign(top + bottom, -1);
  return t;
}

Tangle Tangle::unchecked(int top, int bottom, std::vector<int16_t> partner) {
  Tangle t;
  t.top_ = top;
  t.bottom_ = bottom;
  t.p_ = std::move(partner);
  return t;
}

Tangle Tangle::identity(int n) {
  Tangle t = all_isolated(n, n);
  for (int i = 0; i < n; ++i) {
    t.p_[i] = static_cast<int16_t>(n + i);
    t.p_[n + i] = static_cast<int16_t>(i);
  }
  return t;
}

int Tangle::rank() const {
  int r = 0;
  for (int i = 0; i < top_; ++i)
    if (p_[i] >= top_) ++r;
  return r;
}

Tangle Tangle::adjoint() const {
  Tangle t = all_isolated(bottom_, top_);
  auto map = [&](int i) { return i < top_ ? bottom_ + i : i - top_; };
  for (int i = 0; i < points(); ++i)
    t.p_[map(i)] = p_[i] == -1 ? -1 : static_cast<int16_t>(map(p_[i]));
  return t;
}

Tangle Tangle::juxtapose(const Tangle& right) const {
  Tangle t = all_isolated(top_ + right.top_, bottom_ + right.bottom_);
  auto map_left = [&](int i) { return i < top_ ? i : i + right.top_; };
  auto map_right = [&](int i) {
    return i < right.top_ ? top_ + i : top_ + bottom_ + i;
  };
  for (int i = 0; i < points(); ++i)
    if (p_[i] != -1) t.p_[map_left(i)] = static_cast<int16_t>(map_left(p_[i]));
  for (int i = 0; i < right.points(); ++i)
    if (right.p_[i] != -1)
      t.p_[map_right(i)] = static_cast<int16_t>(map_right(right.p_[i]));
  return t;
}

size_t Tangle::hash() const {
  size_t h = 1469598103934665603ull;
  auto mix = [&h](size_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<size_t>(top_));
  mix(static_cast<size_t>(bottom_));
  for (int16_t v : p_) mix(static_cast<size_t>(v) + 7);
  return h;
}

std::string Tangle::point_name(int i) const {
  if (i < top_) return "T" + std::to_string(i + 1);
  return "B" + std::to_string(i - top_ + 1);
}

Tangle generator(GenKind kind, int n, int i) {
  if (kind == GenKind::id) return Tangle::identity(n);
  const bool needs_pair = kind != GenKind::p;
  if (i < 1 || (needs_pair ? i > n - 1 : i > n))
    throw IndexOutOfRange("generator index out of range");
  std::vector<int16_t> p(2 * n);
  for (int j = 0; j < n; ++j) {
    p[j] = static_cast<int16_t>(n + j);
    p[n + j] = static_cast<int16_t>(j);
  }
  auto link = [&](int a, int b) {
    p[a] = static_cast<int16_t>(b);
    p[b] = static_cast<int16_t>(a);
  };
  int Ti = i - 1, Bi = n + i - 1;
  switch (kind) {
    case GenKind::p:
      p[Ti] = p[Bi] = -1;
      break;
    case GenKind::e:
      link(Ti, Ti + 1);
      link(Bi, Bi + 1);
      break;
    case GenKind::l:  // Ti-Bi+1, Ti+1 and Bi isolated
      p[Ti + 1] = p[Bi] = -1;
      link(Ti, Bi + 1);
      break;
    case GenKind::r:  // Ti+1-Bi, Ti and Bi+1 isolated
      p[Ti] = p[Bi + 1] = -1;
      link(Ti + 1, Bi);
      break;
    default:
      break;
  }
  return Tangle(n, n, std::move(p));
}

namespace {

void enumerate_rec(std::vector<std::pair<int, int>>& pending,
                   std::vector<int16_t>& circ_partner,
                   const std::function<void()>& emit) {
  if (pending.empty()) {
    emit();
    return;
  }
  auto [lo, hi] = pending.back();
  if (hi - lo <= 0) {
    pending.pop_back();
    enumerate_rec(pending, circ_partner, emit);
    pending.push_back({lo, hi});
    return;
  }
  pending.pop_back();
  // first point pairs with each later point in increasing circular position
  for (int t = lo + 1; t < hi; ++t) {
    circ_partner[lo] = static_cast<int16_t>(t);
    circ_partner[t] = static_cast<int16_t>(lo);
    pending.push_back({t + 1, hi});  // remainder, varies fastest
    pending.push_back({lo + 1, t}); // enclosed arc, processed first
    enumerate_rec(pending, circ_partner, emit);
    pending.pop_back();
    pending.pop_back();
    circ_partner[lo] = -1;
    circ_partner[t] = -1;
  }
  // isolated last
  pending.push_back({lo + 1, hi});
  enumerate_rec(pending, circ_partner, emit);
  pending.pop_back();
  pending.push_back({lo, hi});
}

}  // namespace

std::vector<Tangle> enumerate_tangles(int m, int n, int bound) {
  if (m < 0 || n < 0) throw IndexOutOfRange("enumerate_tangles: negative size");
  if (m + n > bound)
    throw BoundExceeded("enumerate_tangles: " + std::to_string(m + n) +
                        " boundary points exceeds bound " +
                        std::to_string(bound));
  const int N = m + n;
  std::vector<Tangle> out;
  std::vector<int16_t> circ_partner(N, -1);
  std::vector<std::pair<int, int>> pending{{0, N}};
  auto emit = [&]() {
    std::vector<int16_t> flat(N, -1);
    for (int c = 0; c < N; ++c) {
      if (circ_partner[c] == -1) continue;
      flat[flat_of_circ(c, m, n)] =
          static_cast<int16_t>(flat_of_circ(circ_partner[c], m, n));
    }
    out.push_back(Tangle(m, n, std::move(flat)));
  };
  enumerate_rec(pending, circ_partner, emit);
  return out;
}

Int count_motzkin(int k) {
  if (k < 0) throw IndexOutOfRange("count_motzkin: negative k");
  auto closed = [](int kk) {
    Int total = 0;
    for (int i = 0; 2 * i <= kk; ++i)
      total += binom(kk, 2 * i) * binom(2 * i, i) / (i + 1);
    return total;
  };
  // convolution recursion from the counting lemma's proof
  std::vector<Int> m(k + 1);
  for (int kk = 0; kk <= k; ++kk) {
    if (kk == 0) {
      m[kk] = 1;
    } else {
      m[kk] = m[kk - 1];
      for (int i = 1; i < kk; ++i) m[kk] += m[i - 1] * m[kk - i - 1];
    }
    if (m[kk] != closed(kk))
      throw MotzkinError("count_motzkin: recursion/closed-form disagreement");
  }
  return m[k];
}

Int count_paths(int n, int r) {
  if (n < 0) throw IndexOutOfRange("count_paths: negative n");
  if (r < 0 || r > n) return 0;
  std::vector<std::vector<Int>> m(n + 1);
  m[0] = {Int(1)};
  for (int k = 1; k <= n; ++k) {
    m[k].assign(k + 1, Int(0));
    for (int s = 0; s <= k; ++s) {
      Int v = 0;
      if (s - 1 >= 0 && s - 1 <= k - 1) v += m[k - 1][s - 1];
      if (s <= k - 1) v += m[k - 1][s];
      if (s + 1 <= k - 1) v += m[k - 1][s + 1];
      m[k][s] = v;
    }
  }
  // closed form cross-check (m_{n,r} = sum_i C(n,r+2i) {r+2i brace i})
  Int check = 0;
  for (int i = 0; r + 2 * i <= n; ++i)
    check += binom(n, r + 2 * i) * (binom(r + 2 * i, i) - binom(r + 2 * i, i - 1));
  if (check != m[n][r])
    throw MotzkinError("count_paths: recursion/closed-form disagreement");
  return m[n][r];
}

ContractResult contract(const Tangle& x, const Tangle* y,
                        const std::vector<std::pair<int, int>>& idents,
                        const std::vector<PointRef>& out_top,
                        const std::vector<PointRef>& out_bottom) {
  const int nx = x.points();
  const int ny = y ? y->points() : 0;
  const int N = nx + ny;
  assert(N <= 160);
  std::array<int16_t, 160> partner;
  std::array<int16_t, 160> ident;
  std::array<int16_t, 160> outpos;
  std::array<bool, 160> visited{};
  for (int i = 0; i < nx; ++i) partner[i] = x.partners()[i];
  for (int i = 0; i < ny; ++i) {
    int16_t p = y->partners()[i];
    partner[nx + i] = p == -1 ? int16_t(-1) : static_cast<int16_t>(p + nx);
  }
  for (int i = 0; i < N; ++i) {
    ident[i] = -1;
    outpos[i] = -1;
  }
  for (auto [a, b] : idents) {
    assert(a >= 0 && a < N && b >= 0 && b < N && a != b);
    assert(ident[a] == -1 && ident[b] == -1);
    ident[a] = static_cast<int16_t>(b);
    ident[b] = static_cast<int16_t>(a);
  }
  const int out_n = static_cast<int>(out_top.size() + out_bottom.size());
  auto global = [&](const PointRef& r) { return r.part == 0 ? r.idx : nx + r.idx; };
  for (size_t i = 0; i < out_top.size(); ++i)
    outpos[global(out_top[i])] = static_cast<int16_t>(i);
  for (size_t i = 0; i < out_bottom.size(); ++i)
    outpos[global(out_bottom[i])] = static_cast<int16_t>(out_top.size() + i);

  std::vector<int16_t> res(out_n, -1);
  int loops = 0;

  // components through free (= output) points
  for (int i = 0; i < N; ++i) {
    if (ident[i] != -1 || visited[i]) continue;
    assert(outpos[i] != -1);
    visited[i] = true;
    int cur = i;
    while (true) {
      int nxt = partner[cur];
      if (nxt == -1) break;  // dead end: i stays isolated
      if (ident[nxt] == -1) {
        // reached another free point: output strand
        visited[nxt] = true;
        res[outpos[i]] = outpos[nxt];
        res[outpos[nxt]] = outpos[i];
        break;
      }
      visited[nxt] = true;
      cur = ident[nxt];
      visited[cur] = true;
    }
  }
  // remaining components are entirely inside the seam: open paths are
  // removed with factor 1, closed cycles contribute a loop each
  for (int i = 0; i < N; ++i) {
    if (visited[i] || ident[i] == -1) continue;
    if (partner[i] != -1) continue;  // walk open paths from their dead ends
    visited[i] = true;
    int cur = ident[i];
    visited[cur] = true;
    while (partner[cur] != -1) {
      cur = partner[cur];
      visited[cur] = true;
      if (ident[cur] == -1) break;  // other end is a dead end too
      cur = ident[cur];
      visited[cur] = true;
    }
  }
  for (int i = 0; i < N; ++i) {
    if (visited[i] || ident[i] == -1) continue;
    // pure cycle
    ++loops;
    int cur = i;
    while (!visited[cur]) {
      visited[cur] = true;
      int j = partner[cur];
      visited[j] = true;
      cur = ident[j];
    }
  }

#ifndef NDEBUG
  Tangle t(static_cast<int>(out_top.size()),
           static_cast<int>(out_bottom.size()), std::move(res));
#else
  Tangle t = Tangle::unchecked(static_cast<int>(out_top.size()),
                               static_cast<int>(out_bottom.size()),
                               std::move(res));
#endif
  return {std::move(t), loops};
}

ContractResult multiply_tangles(const Tangle& x, const Tangle& y) {
  if (x.bottom() != y.top())
    throw ShapeMismatch("multiply: inner shapes differ (" +
                        std::to_string(x.bottom()) + " vs " +
                        std::to_string(y.top()) + ")");
  std::vector<std::pair<int, int>> idents(x.bottom());
  for (int j = 0; j < x.bottom(); ++j)
    idents[j] = {x.top() + j, x.points() + j};
  std::vector<PointRef> out_top(x.top()), out_bottom(y.bottom());
  for (int i = 0; i < x.top(); ++i) out_top[i] = {0, i};
  for (int i = 0; i < y.bottom(); ++i) out_bottom[i] = {1, y.top() + i};
  return contract(x, &y, idents, out_top, out_bottom);
}

int closure_loops(const Tangle& x) {
  if (x.top() != x.bottom())
    throw ShapeMismatch("closure: diagram is not square");
  std::vector<std::pair<int, int>> idents(x.top());
  for (int i = 0; i < x.top(); ++i) idents[i] = {i, x.top() + i};
  return contract(x, nullptr, idents, {}, {}).loops;
}

ContractResult close_last_column(const Tangle& x) {
  if (x.top() != x.bottom() || x.top() < 1)
    throw ShapeMismatch("close_last_column: need a square diagram, n >= 1");
  const int n = x.top();
  std::vector<std::pair<int, int>> idents{{n - 1, 2 * n - 1}};
  std::vector<PointRef> out_top(n - 1), out_bottom(n - 1);
  for (int i = 0; i < n - 1; ++i) {
    out_top[i] = {0, i};
    out_bottom[i] = {0, n + i};
  }
  return contract(x, nullptr, idents, out_top, out_bottom);
}

ContractResult glue_blocks(const Tangle& x, const Tangle& y, int xa, int ya,
                           int len, const std::vector<PointRef>& out_top,
                           const std::vector<PointRef>& out_bottom) {
  if (len < 0 || xa < 0 || ya < 0 || xa + len > x.points() ||
      ya + len > y.points())
    throw SeamMismatch("glue_blocks: seam blocks out of range");
  std::vector<std::pair<int, int>> idents(len);
  for (int t = 0; t < len; ++t) {
    int xc = xa + t;
    int yc = ya + len - 1 - t;  // orientation-reversed along the seam
    idents[t] = {flat_of_circ(xc, x.top(), x.bottom()),
                 x.points() + flat_of_circ(yc, y.top(), y.bottom())};
  }
  return contract(x, &y, idents, out_top, out_bottom);
}

std::string Tangle::compact() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < points(); ++i) {
    if (p_[i] > i) {
      if (!first) os << ",";
      first = false;
      os << point_name(i) << "-" << point_name(p_[i]);
    }
  }
  std::ostringstream iso;
  bool have_iso = false;
  for (int i = 0; i < points(); ++i) {
    if (p_[i] == -1) {
      if (have_iso) iso << ",";
      have_iso = true;
      iso << point_name(i);
    }
  }
  if (have_iso) os << ";iso:" << iso.str();
  return os.str();
}

namespace {

std::pair<char, int> parse_point(const std::string& tok) {
  if (tok.size() < 2 || (tok[0] != 'T' && tok[0] != 'B'))
    throw ParseError("bad point name: " + tok);
  return {tok[0], std::stoi(tok.substr(1))};
}

}  // namespace

Tangle Tangle::from_compact(const std::string& s) {
  std::string edges = s, iso;
  if (auto pos = s.find(";iso:"); pos != std::string::npos) {
    edges = s.substr(0, pos);
    iso = s.substr(pos + 5);
  }
  auto split = [](const std::string& str, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : str) {
      if (c == sep) {
        if (!cur.empty()) out.push_back(cur);
        cur.clear();
      } else if (c != ' ') {
        cur += c;
      }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
  };
  int m = 0, n = 0;
  std::vector<std::pair<std::pair<char, int>, std::pair<char, int>>> pairs;
  for (const auto& e : split(edges, ',')) {
    auto dash = e.find('-');
    if (dash == std::string::npos) throw ParseError("bad edge: " + e);
    auto a = parse_point(e.substr(0, dash));
    auto b = parse_point(e.substr(dash + 1));
    pairs.push_back({a, b});
    for (auto& pt : {a, b})
      (pt.first == 'T' ? m : n) = std::max(pt.first == 'T' ? m : n, pt.second);
  }
  for (const auto& t : split(iso, ',')) {
    auto pt = parse_point(t);
    (pt.first == 'T' ? m : n) = std::max(pt.first == 'T' ? m : n, pt.second);
  }
  std::vector<int16_t> flat(m + n, -1);
  auto flat_of = [&](std::pair<char, int> pt) {
    return pt.first == 'T' ? pt.second - 1 : m + pt.second - 1;
  };
  for (auto& [a, b] : pairs) {
    int fa = flat_of(a), fb = flat_of(b);
    flat[fa] = static_cast<int16_t>(fb);
    flat[fb] = static_cast<int16_t>(fa);
  }
  return Tangle(m, n, std::move(flat));
}

std::string Tangle::json() const {
  nlohmann::json j;
  j["top"] = top_;
  j["bottom"] = bottom_;
  auto edges = nlohmann::json::array();
  for (int i = 0; i < points(); ++i)
    if (p_[i] > i)
      edges.push_back(
          nlohmann::json::array({point_name(i), point_name(p_[i])}));
  j["edges"] = edges;
  return j.dump();
}

Tangle Tangle::from_json(const std::string& s) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const std::exception& e) {
    throw ParseError(std::string("tangle json: ") + e.what());
  }
  int m = j.at("top").get<int>();
  int n = j.at("bottom").get<int>();
  std::vector<int16_t> flat(m + n, -1);
  for (const auto& e : j.at("edges")) {
    auto a = parse_point(e.at(0).get<std::string>());
    auto b = parse_point(e.at(1).get<std::string>());
    auto flat_of = [&](std::pair<char, int> pt) {
      int idx = pt.first == 'T' ? pt.second - 1 : m + pt.second - 1;
      if (pt.second < 1 || (pt.first == 'T' ? pt.second > m : pt.second > n))
        throw ParseError("point out of range: " + std::string(1, pt.first) +
                         std::to_string(pt.second));
      return idx;
    };
    int fa = flat_of(a), fb = flat_of(b);
    flat[fa] = static_cast<int16_t>(fb);
    flat[fb] = static_cast<int16_t>(fa);
  }
  return Tangle(m, n, std::move(flat));
}

std::string Tangle::dot(const std::string& name) const {
  std::ostringstream os;
  os << "graph " << name << " {\n  rankdir=TB;\n";
  os << "  { rank=source;";
  for (int i = 0; i < top_; ++i) os << " T" << i + 1 << ";";
  os << " }\n  { rank=sink;";
  for (int i = 0; i < bottom_; ++i) os << " B" << i + 1 << ";";
  os << " }\n";
  for (int i = 0; i < points(); ++i)
    if (p_[i] > i)
      os << "  " << point_name(i) << " -- " << point_name(p_[i]) << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace motzkin
