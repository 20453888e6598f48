#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "motzkin/rational.hpp"

namespace motzkin {

// A Motzkin (m,n)-tangle: a planar non-crossing partial matching on m upper
// and n lower boundary points.  Points are indexed flat: 0..m-1 are T1..Tm
// (left to right), m..m+n-1 are B1..Bn (left to right).  Planarity is
// non-crossing in the circular order T1,...,Tm,Bn,...,B1.
class Tangle {
 public:
  Tangle(int top, int bottom, std::vector<int16_t> partner);
  static Tangle all_isolated(int top, int bottom);
  static Tangle identity(int n);
  // construction without the planarity check, for internal callers whose
  // output is planar by construction
  static Tangle unchecked(int top, int bottom, std::vector<int16_t> partner);

  int top() const { return top_; }
  int bottom() const { return bottom_; }
  int points() const { return top_ + bottom_; }
  // partner of flat point i, or -1 if isolated
  int partner(int i) const { return p_[i]; }
  const std::vector<int16_t>& partners() const { return p_; }

  bool is_matched(int i) const { return p_[i] >= 0; }
  // number of through strings (one endpoint on each edge)
  int rank() const;

  Tangle adjoint() const;
  Tangle juxtapose(const Tangle& right) const;

  auto operator<=>(const Tangle&) const = default;

  size_t hash() const;

  std::string compact() const;                       // "T1-B2,T3-T4;iso:T2"
  static Tangle from_compact(const std::string& s);  // inverse of compact()
  std::string json() const;
  static Tangle from_json(const std::string& s);
  std::string dot(const std::string& name = "tangle") const;

  std::string point_name(int i) const;

 private:
  Tangle() = default;
  void validate() const;
  int top_ = 0, bottom_ = 0;
  std::vector<int16_t> p_;
};

struct TangleHash {
  size_t operator()(const Tangle& t) const { return t.hash(); }
};

// Named generator diagrams of M_n(D); i is 1-based.
//   1_n : Tj-Bj for all j
//   p_i : all straight except Ti, Bi isolated
//   e_i : Ti-Ti+1, Bi-Bi+1, others straight
//   l_i : Ti-Bi+1 with Ti+1, Bi isolated, others straight
//   r_i : Ti+1-Bi with Ti, Bi+1 isolated, others straight
enum class GenKind { id, e, l, r, p };
Tangle generator(GenKind kind, int n, int i = 0);

// All Motzkin (m,n)-tangles exactly once, in the frozen canonical order:
// recursively over the circular point sequence, the first point pairs with
// each later point in increasing circular position (enumerating the enclosed
// arc before the remainder), and is isolated last.  Gram matrices are indexed
// by this order, bit-for-bit reproducibly.
std::vector<Tangle> enumerate_tangles(int m, int n, int bound = 18);

// k-th Motzkin number by the binomial sum, cross-checked internally against
// the convolution recursion M_k = M_{k-1} + sum M_{i-1} M_{k-i-1}.
Int count_motzkin(int k);

// Number of Motzkin n-paths of rank r (0 if r < 0 or r > n), by the
// tridiagonal recursion, cross-checked against the closed binomial form.
Int count_paths(int n, int r);

// ---- contraction kernel ------------------------------------------------
//
// Everything that glues diagrams (multiplication, trace closure, conditional
// expectation, bimodule actions, tensor maps) goes through this one kernel.
//
// Input: one or two tangles, a list of point identifications (flat indices,
// second tangle's offset by x.points()), and the output boundary as lists of
// (part, flat index).  Strand components are traced through identified
// points.  Closed cycles are removed and counted in `loops`.  Open strands
// that dead-end inside the seam are removed with factor 1; a surviving
// boundary endpoint becomes isolated.
struct ContractResult {
  Tangle t;
  int loops;
};

struct PointRef {
  int part;  // 0 or 1
  int idx;   // flat index within that part
};

ContractResult contract(const Tangle& x, const Tangle* y,
                        const std::vector<std::pair<int, int>>& idents,
                        const std::vector<PointRef>& out_top,
                        const std::vector<PointRef>& out_bottom);

// x (a,b) * y (b,c) -> (a,c) with the loop count
ContractResult multiply_tangles(const Tangle& x, const Tangle& y);

// loops in the full closure of a square diagram (Ti joined to Bi)
int closure_loops(const Tangle& x);

// close the rightmost column (Tn to Bn) of a square diagram
ContractResult close_last_column(const Tangle& x);

// Generic block glue: contracts x's boundary points
// xa..xa+len-1 against y's points ya+len-1..ya (orientation-reversed).
ContractResult glue_blocks(const Tangle& x, const Tangle& y, int xa, int ya,
                           int len, const std::vector<PointRef>& out_top,
                           const std::vector<PointRef>& out_bottom);

}  // namespace motzkin
