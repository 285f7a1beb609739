#include "quiverkit/quiver.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <sstream>

#include "quiverkit/detail/compute_cache.hpp"

namespace quiverkit {

namespace {

// Session registry handing equal-content quivers the same cache.  The
// perpendicular-category machinery rebuilds the same local quivers over and
// over; without sharing, every rebuild recomputes its hom/ext table from
// scratch.  Arrow order is irrelevant to the cached values (only the
// multiplicity matrix enters the forms), so the key sorts the arrows.
std::shared_ptr<detail::ComputeCache> shared_cache(int n,
                                                   const std::vector<Arrow>& arrows) {
  static std::mutex mu;
  static std::map<std::vector<std::pair<int, int>>,
                  std::shared_ptr<detail::ComputeCache>>
      registry;
  std::vector<std::pair<int, int>> key;
  key.reserve(arrows.size() + 1);
  key.emplace_back(n, -1);
  for (const Arrow& a : arrows) key.emplace_back(a.tail, a.head);
  std::sort(key.begin() + 1, key.end());
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[std::move(key)];
  if (!slot) slot = std::make_shared<detail::ComputeCache>();
  return slot;
}

}  // namespace

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    fail(Err::Overflow, "integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    fail(Err::Overflow, "integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(Err::Overflow, "integer overflow in multiplication");
  return r;
}

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows)
    : n_(vertex_count), arrows_(std::move(arrows)) {
  if (n_ <= 0) fail(Err::Precondition, "quiver needs at least one vertex");
  counts_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (const Arrow& a : arrows_) {
    if (a.tail < 0 || a.tail >= n_ || a.head < 0 || a.head >= n_)
      fail(Err::VertexOutOfRange, "arrow endpoint out of range");
    ++counts_[static_cast<std::size_t>(a.tail) * n_ + a.head];
  }
  cache_ = shared_cache(n_, arrows_);
}

bool Quiver::has_loop() const noexcept {
  for (int v = 0; v < n_; ++v)
    if (arrow_count(v, v) > 0) return true;
  return false;
}

bool Quiver::same_content(const Quiver& other) const {
  return n_ == other.n_ && counts_ == other.counts_;
}

const char* root_class_name(RootClass cls) {
  switch (cls) {
    case RootClass::Real: return "real";
    case RootClass::Isotropic: return "isotropic";
    case RootClass::StrictlyImaginary: return "strictly imaginary";
    case RootClass::NotARootCandidate: return "not a root candidate";
  }
  return "?";
}

RootClass classify_tits_value(Int q) {
  if (q == 1) return RootClass::Real;
  if (q == 0) return RootClass::Isotropic;
  if (q < 0) return RootClass::StrictlyImaginary;
  return RootClass::NotARootCandidate;
}

namespace {

long long parse_int_token(const std::string& tok, int lineno) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(Err::Syntax, "line " + std::to_string(lineno) + ": expected an integer, got '" + tok + "'");
  return value;
}

}  // namespace

Quiver parse_quiver(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long declared = -1;
  std::vector<Arrow> arrows;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (tok[0] == "vertices") {
      if (tok.size() != 2)
        fail(Err::Syntax, "line " + std::to_string(lineno) + ": expected 'vertices <n>'");
      if (declared >= 0)
        fail(Err::VertexCountMismatch,
             "line " + std::to_string(lineno) + ": vertex count declared twice");
      declared = parse_int_token(tok[1], lineno);
      if (declared < 1 || declared > 100000)
        fail(Err::Syntax, "line " + std::to_string(lineno) + ": vertex count out of range");
    } else if (tok[0] == "arrow") {
      if (tok.size() != 3)
        fail(Err::Syntax, "line " + std::to_string(lineno) + ": expected 'arrow <tail> <head>'");
      if (declared < 0)
        fail(Err::Syntax, "line " + std::to_string(lineno) + ": 'vertices' must precede arrows");
      long long t = parse_int_token(tok[1], lineno);
      long long h = parse_int_token(tok[2], lineno);
      for (long long v : {t, h})
        if (v < 1 || v > declared)
          fail(Err::VertexOutOfRange, "line " + std::to_string(lineno) + ": vertex " +
                                          std::to_string(v) + " out of range (1.." +
                                          std::to_string(declared) + ")");
      if (t == h)
        fail(Err::LoopArrow, "line " + std::to_string(lineno) + ": loop at vertex " +
                                 std::to_string(t) + " (loop-free quiver required)");
      arrows.push_back({static_cast<int>(t - 1), static_cast<int>(h - 1)});
    } else {
      fail(Err::Syntax, "line " + std::to_string(lineno) + ": unknown directive '" + tok[0] + "'");
    }
  }
  if (declared < 0) fail(Err::Syntax, "missing 'vertices' declaration");
  return Quiver(static_cast<int>(declared), std::move(arrows));
}

Int euler_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  require_dim(q, a, "euler form, left argument");
  require_dim(q, b, "euler form, right argument");
  const int n = q.vertex_count();
  Int total = 0;
  for (int v = 0; v < n; ++v) total = checked_add(total, checked_mul(a[v], b[v]));
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w) {
      Int c = q.arrow_count(u, w);
      if (c != 0) total = checked_sub(total, checked_mul(c, checked_mul(a[u], b[w])));
    }
  return total;
}

std::pair<Int, RootClass> tits_form(const Quiver& q, const DimVector& a) {
  Int v = euler_form(q, a, a);
  return {v, classify_tits_value(v)};
}

std::vector<int> topological_order(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<Int> indeg(n, 0);
  for (int u = 0; u < n; ++u)
    for (int w = 0; w < n; ++w) indeg[w] += q.arrow_count(u, w);
  std::vector<char> placed(n, 0);
  std::vector<int> order;
  order.reserve(n);
  for (int round = 0; round < n; ++round) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    if (pick < 0) break;
    placed[pick] = 1;
    order.push_back(pick);
    for (int w = 0; w < n; ++w) indeg[w] -= q.arrow_count(pick, w);
  }
  if (static_cast<int>(order.size()) == n) return order;

  // Every remaining vertex lies on or leads into a cycle; walk until a
  // vertex repeats and report the cycle with 1-based labels.
  int start = 0;
  while (placed[start]) ++start;
  std::vector<int> seen_at(n, -1);
  std::vector<int> walk;
  int v = start;
  while (seen_at[v] < 0) {
    seen_at[v] = static_cast<int>(walk.size());
    walk.push_back(v);
    int next = -1;
    for (int w = 0; w < n; ++w)
      if (!placed[w] && q.arrow_count(v, w) > 0) {
        next = w;
        break;
      }
    if (next < 0) fail(Err::Internal, "cycle walk left the unresolved set");
    v = next;
  }
  std::string msg = "oriented cycle: ";
  for (std::size_t i = seen_at[v]; i < walk.size(); ++i)
    msg += std::to_string(walk[i] + 1) + " -> ";
  msg += std::to_string(v + 1);
  fail(Err::OrientedCycle, msg);
}

std::vector<DimVector> projective_dims(const Quiver& q) {
  const int n = q.vertex_count();
  auto topo = topological_order(q);
  std::vector<DimVector> result(n);
  for (int a = 0; a < n; ++a) {
    DimVector p(n, 0);
    for (int w : topo) {
      Int paths = (w == a) ? 1 : 0;
      for (int u = 0; u < n; ++u) {
        Int c = q.arrow_count(u, w);
        if (c != 0) paths = checked_add(paths, checked_mul(c, p[u]));
      }
      p[w] = paths;
    }
    result[a] = std::move(p);
  }
  return result;
}

std::vector<DimVector> injective_dims(const Quiver& q) {
  const int n = q.vertex_count();
  auto topo = topological_order(q);
  std::vector<DimVector> result(n);
  for (int a = 0; a < n; ++a) {
    DimVector p(n, 0);
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      int v = *it;
      Int paths = (v == a) ? 1 : 0;
      for (int w = 0; w < n; ++w) {
        Int c = q.arrow_count(v, w);
        if (c != 0) paths = checked_add(paths, checked_mul(c, p[w]));
      }
      p[v] = paths;
    }
    result[a] = std::move(p);
  }
  return result;
}

bool is_zero(const DimVector& v) {
  return std::all_of(v.begin(), v.end(), [](Int x) { return x == 0; });
}

DimVector unit_vector(int n, int at) {
  DimVector v(n, 0);
  v[at] = 1;
  return v;
}

DimVector add(const DimVector& a, const DimVector& b) {
  DimVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
  return r;
}

DimVector sub(const DimVector& a, const DimVector& b) {
  DimVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
  return r;
}

DimVector scale(Int k, const DimVector& a) {
  DimVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(k, a[i]);
  return r;
}

void require_dim(const Quiver& q, const DimVector& a, const char* what) {
  if (static_cast<int>(a.size()) != q.vertex_count())
    fail(Err::Precondition,
         std::string(what) + ": dimension vector has length " + std::to_string(a.size()) +
             ", quiver has " + std::to_string(q.vertex_count()) + " vertices");
  for (Int x : a)
    if (x < 0)
      fail(Err::Precondition, std::string(what) + ": negative entry in dimension vector");
}

void require_acyclic(const Quiver& q) { (void)topological_order(q); }

std::string format_vector(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  s += ")";
  return s;
}

}  // namespace quiverkit
