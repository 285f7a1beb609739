#include "quiverkit/homext.hpp"

#include <map>

#include "quiverkit/detail/compute_cache.hpp"

namespace quiverkit {

namespace {

// Lexicographically next vector in the box [0, bound]; the last coordinate
// is the least significant digit.
bool next_subvector(DimVector& v, const DimVector& bound) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    if (v[i] < bound[i]) {
      ++v[i];
      for (std::size_t j = i + 1; j < v.size(); ++j) v[j] = 0;
      return true;
    }
  }
  return false;
}

bool prev_subvector(DimVector& v, const DimVector& bound) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    if (v[i] > 0) {
      --v[i];
      for (std::size_t j = i + 1; j < v.size(); ++j) v[j] = bound[j];
      return true;
    }
  }
  return false;
}

double box_volume(const DimVector& a) {
  double p = 1;
  for (Int x : a) p *= static_cast<double>(x) + 1;
  return p;
}

std::vector<Int> pair_key(const DimVector& a, const DimVector& b) {
  std::vector<Int> key;
  key.reserve(a.size() + b.size());
  key.insert(key.end(), a.begin(), a.end());
  key.insert(key.end(), b.begin(), b.end());
  return key;
}

// <x,y> straight off the multiplicity matrix, without the argument validation
// of the public entry point; the scans below evaluate this per box point.
Int euler_raw(const Quiver& q, const DimVector& x, const DimVector& y) {
  const int n = q.vertex_count();
  Int total = 0;
  for (int v = 0; v < n; ++v) total = checked_add(total, checked_mul(x[v], y[v]));
  for (int u = 0; u < n; ++u) {
    if (x[u] == 0) continue;
    for (int w = 0; w < n; ++w) {
      Int c = q.arrow_count(u, w);
      if (c != 0) total = checked_sub(total, checked_mul(c, checked_mul(x[u], y[w])));
    }
  }
  return total;
}

// Since generic hom is nonnegative, ext(x,y) >= -<x,y>; a negative form value
// therefore refutes ext(x,y) = 0 without touching the recursion.  This is the
// workhorse filter: in the split scans almost every candidate dies here.
bool ext_can_vanish(const Quiver& q, const DimVector& x, const DimVector& y) {
  return euler_raw(q, x, y) >= 0;
}

Int ext_impl(const Quiver& q, const DimVector& a, const DimVector& b);

Int hom_impl(const Quiver& q, const DimVector& a, const DimVector& b) {
  Int value = checked_add(euler_form(q, a, b), ext_impl(q, a, b));
  if (value < 0) fail(Err::Internal, "generic hom came out negative");
  return value;
}

// Allocation-free cache probe: the scratch key never outlives the call, so
// one buffer per thread suffices even across the recursion.
bool ext_lookup(detail::ComputeCache& cache, const DimVector& a, const DimVector& b,
                Int& out) {
  thread_local std::vector<Int> probe;
  probe.clear();
  probe.insert(probe.end(), a.begin(), a.end());
  probe.insert(probe.end(), b.begin(), b.end());
  std::lock_guard<std::mutex> lock(cache.mu);
  auto it = cache.ext.find(probe);
  if (it == cache.ext.end()) return false;
  out = it->second;
  return true;
}

Int ext_impl(const Quiver& q, const DimVector& a, const DimVector& b) {
  if (is_zero(a) || is_zero(b)) return 0;
  auto& cache = q.compute_cache();
  Int hit = 0;
  if (ext_lookup(cache, a, b, hit)) return hit;

  const int n = q.vertex_count();
  const Int direct = checked_sub(0, euler_form(q, a, b));
  Int best = direct > 0 ? direct : 0;

  // Enumerate whichever side has the smaller box: subrepresentations s of a
  // (value -<s,b>) or subrepresentations s of b (value -<a,b-s>, i.e. the
  // generic quotients of b).  Both objectives are linear in s, so the scan
  // below carries the value and the complement whole-s along incrementally
  // instead of re-evaluating the form at every box point.
  const bool a_side = box_volume(a) <= box_volume(b);
  const DimVector& whole = a_side ? a : b;
  const Int base = a_side ? 0 : direct;

  // grad[v] is the objective slope in coordinate v: -<e_v, b> on the a side,
  // <a, e_v> on the b side.  Its positive part over the box bounds the
  // achievable value and often lets the scan stop early.
  std::vector<Int> grad(n);
  Int bound = base;
  for (int v = 0; v < n; ++v) {
    Int g = 0;
    if (a_side) {
      for (int w = 0; w < n; ++w)
        g = checked_add(g, checked_mul(q.arrow_count(v, w), b[w]));
      g = checked_sub(g, b[v]);
    } else {
      g = a[v];
      for (int u = 0; u < n; ++u)
        g = checked_sub(g, checked_mul(q.arrow_count(u, v), a[u]));
    }
    grad[v] = g;
    if (g > 0) bound = checked_add(bound, checked_mul(whole[v], g));
  }

  if (best < bound) {
    DimVector s(n, 0);
    DimVector rest = whole;
    Int val = base;
    while (true) {
      // Odometer step, last coordinate least significant (same order as
      // next_subvector), with val and rest updated in place.
      int i = n - 1;
      while (i >= 0 && s[i] == whole[i]) --i;
      if (i < 0) break;
      ++s[i];
      --rest[i];
      val = checked_add(val, grad[i]);
      for (int j = i + 1; j < n; ++j) {
        if (s[j] == 0) continue;
        val = checked_sub(val, checked_mul(grad[j], s[j]));
        rest[j] += s[j];
        s[j] = 0;
      }
      if (s == whole) break;  // endpoints are already covered by `direct`
      if (val > best && ext_can_vanish(q, s, rest) && ext_impl(q, s, rest) == 0)
        best = val;
      if (best >= bound) break;
    }
  }
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.ext.emplace(pair_key(a, b), best);
  }
  return best;
}

bool schur_impl(const Quiver& q, const DimVector& a) {
  auto& cache = q.compute_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.schur.find(a);
    if (it != cache.schur.end()) return it->second != 0;
  }
  bool result = true;
  DimVector b(a.size(), 0);
  while (next_subvector(b, a)) {
    if (b == a) break;
    DimVector rest = sub(a, b);
    if (rest < b) continue;  // lexicographic halving of the split search
    if (!ext_can_vanish(q, b, rest) || !ext_can_vanish(q, rest, b)) continue;
    if (ext_impl(q, b, rest) == 0 && ext_impl(q, rest, b) == 0) {
      result = false;
      break;
    }
  }
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    cache.schur.emplace(a, result ? 1 : 0);
  }
  return result;
}

// First splitting a = b + (a-b) with vanishing ext both ways, in the
// requested scan direction.  Only called when a is not Schur.
DimVector find_split(const Quiver& q, const DimVector& a, SplitOrder order) {
  DimVector b;
  if (order == SplitOrder::Lex) {
    b.assign(a.size(), 0);
    while (next_subvector(b, a)) {
      if (b == a) break;
      DimVector rest = sub(a, b);
      if (!ext_can_vanish(q, b, rest) || !ext_can_vanish(q, rest, b)) continue;
      if (ext_impl(q, b, rest) == 0 && ext_impl(q, rest, b) == 0) return b;
    }
  } else {
    b = a;
    while (prev_subvector(b, a)) {
      if (is_zero(b)) break;
      DimVector rest = sub(a, b);
      if (!ext_can_vanish(q, b, rest) || !ext_can_vanish(q, rest, b)) continue;
      if (ext_impl(q, b, rest) == 0 && ext_impl(q, rest, b) == 0) return b;
    }
  }
  fail(Err::Internal, "no valid splitting of the non-Schur vector " + format_vector(a));
}

void split_collect(const Quiver& q, const DimVector& a, SplitOrder order,
                   std::map<DimVector, Int>& acc) {
  if (schur_impl(q, a)) {
    acc[a] += 1;
    return;
  }
  DimVector b = find_split(q, a, order);
  DimVector rest = sub(a, b);
  split_collect(q, b, order, acc);
  split_collect(q, rest, order, acc);
}

// The decomposition is re-checked against the characterization it was built
// from; any discrepancy is a bug, not an input error.
void validate_decomposition(const Quiver& q, const std::vector<DecompTerm>& terms,
                            const DimVector& total) {
  DimVector sum(total.size(), 0);
  for (const auto& t : terms) {
    sum = add(sum, scale(t.mult, t.root));
    if (t.mult < 1) fail(Err::Internal, "decomposition term with multiplicity < 1");
    if (t.cls == RootClass::NotARootCandidate)
      fail(Err::Internal, "decomposition term is not a root: " + format_vector(t.root));
    if (t.cls == RootClass::StrictlyImaginary && t.mult != 1)
      fail(Err::Internal, "strictly imaginary root with multiplicity > 1");
    if (!schur_impl(q, t.root))
      fail(Err::Internal, "decomposition term is not Schur: " + format_vector(t.root));
    if (t.mult >= 2 && ext_impl(q, t.root, t.root) != 0)
      fail(Err::Internal, "repeated root with generic self-extensions");
  }
  if (sum != total) fail(Err::Internal, "decomposition does not sum to its input");
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = 0; j < terms.size(); ++j)
      if (i != j && ext_impl(q, terms[i].root, terms[j].root) != 0)
        fail(Err::Internal, "decomposition terms with nonvanishing generic ext");
}

}  // namespace

Int generic_ext(const Quiver& q, const DimVector& a, const DimVector& b) {
  require_dim(q, a, "generic_ext");
  require_dim(q, b, "generic_ext");
  require_acyclic(q);
  return ext_impl(q, a, b);
}

Int generic_hom(const Quiver& q, const DimVector& a, const DimVector& b) {
  require_dim(q, a, "generic_hom");
  require_dim(q, b, "generic_hom");
  require_acyclic(q);
  return hom_impl(q, a, b);
}

bool is_generic_subrep(const Quiver& q, const DimVector& sub_dims, const DimVector& whole) {
  require_dim(q, sub_dims, "is_generic_subrep");
  require_dim(q, whole, "is_generic_subrep");
  require_acyclic(q);
  for (std::size_t v = 0; v < whole.size(); ++v)
    if (sub_dims[v] > whole[v])
      fail(Err::Precondition, "is_generic_subrep: candidate exceeds the ambient vector");
  return ext_impl(q, sub_dims, sub(whole, sub_dims)) == 0;
}

bool is_schur_root(const Quiver& q, const DimVector& a) {
  require_dim(q, a, "is_schur_root");
  if (is_zero(a)) fail(Err::Precondition, "is_schur_root: zero dimension vector");
  require_acyclic(q);
  return schur_impl(q, a);
}

Decomposition generic_decomposition(const Quiver& q, const DimVector& a, SplitOrder order) {
  require_dim(q, a, "generic_decomposition");
  if (is_zero(a)) fail(Err::Precondition, "generic_decomposition: zero dimension vector");
  require_acyclic(q);

  std::map<DimVector, Int> acc;  // lexicographic key order keeps this stable
  split_collect(q, a, order, acc);

  // Order the distinct roots so that generic hom from earlier to later terms
  // vanishes, always taking the lexicographically smallest eligible root.
  std::vector<std::pair<DimVector, Int>> rest(acc.begin(), acc.end());
  std::vector<DecompTerm> terms;
  terms.reserve(rest.size());
  while (!rest.empty()) {
    int pick = -1;
    for (std::size_t i = 0; i < rest.size() && pick < 0; ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < rest.size(); ++j)
        if (i != j && hom_impl(q, rest[i].first, rest[j].first) != 0) {
          ok = false;
          break;
        }
      if (ok) pick = static_cast<int>(i);
    }
    if (pick < 0)
      fail(Err::OrderingFailure,
           "no perpendicular ordering of the generic decomposition of " + format_vector(a));
    DecompTerm t;
    t.root = rest[pick].first;
    t.mult = rest[pick].second;
    t.cls = tits_form(q, t.root).second;
    terms.push_back(std::move(t));
    rest.erase(rest.begin() + pick);
  }
  validate_decomposition(q, terms, a);
  return {std::move(terms), a};
}

}  // namespace quiverkit
