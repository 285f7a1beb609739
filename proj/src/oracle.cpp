#include "quiverkit/oracle.hpp"

#include <atomic>
#include <cstdint>
#include <random>

namespace quiverkit {

namespace {

using U64 = std::uint64_t;

// Uniform draw from [0, p) by rejection, so every residue is equally likely.
Int draw_mod(std::mt19937_64& rng, Int p) {
  const U64 up = static_cast<U64>(p);
  const U64 limit = UINT64_MAX - UINT64_MAX % up;  // largest multiple of p
  U64 u;
  do {
    u = rng();
  } while (u >= limit);
  return static_cast<Int>(u % up);
}

FieldRep sample_from(const Quiver& q, const DimVector& dims, Int prime,
                     std::mt19937_64& rng) {
  FieldRep rep{q, prime, dims, {}};
  rep.matrices.reserve(q.arrows().size());
  for (const Arrow& arrow : q.arrows()) {
    FieldMatrix mat;
    mat.rows = static_cast<int>(dims[static_cast<std::size_t>(arrow.head)]);
    mat.cols = static_cast<int>(dims[static_cast<std::size_t>(arrow.tail)]);
    mat.a.resize(static_cast<std::size_t>(mat.rows) * mat.cols);
    for (Int& x : mat.a) x = draw_mod(rng, prime);
    rep.matrices.push_back(std::move(mat));
  }
  return rep;
}

std::mt19937_64 trial_rng(const OracleConfig& cfg, Int trial) {
  return std::mt19937_64(cfg.seed ^ static_cast<U64>(trial));
}

// Rank of a dense matrix mod p (entries already reduced), by Gaussian
// elimination.  Destroys its argument.
int rank_mod(std::vector<std::vector<Int>>& rows, Int p) {
  const int m = static_cast<int>(rows.size());
  const int n = m == 0 ? 0 : static_cast<int>(rows[0].size());
  auto inv_mod = [&](Int a) {
    // Fermat: a^(p-2) mod p.
    Int result = 1, base = a, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int pivot = -1;
    for (int r = rank; r < m; ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    const Int scale = inv_mod(rows[rank][col]);
    for (int c = col; c < n; ++c) rows[rank][c] = rows[rank][c] * scale % p;
    for (int r = 0; r < m; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Int factor = rows[r][col];
      for (int c = col; c < n; ++c) {
        rows[r][c] = (rows[r][c] - factor * rows[rank][c]) % p;
        if (rows[r][c] < 0) rows[r][c] += p;
      }
    }
    ++rank;
  }
  return rank;
}

void check_pair(const FieldRep& u, const FieldRep& v) {
  if (!u.quiver.same_content(v.quiver))
    fail(Err::Precondition, "hom_dim: representations of different quivers");
  if (u.prime != v.prime)
    fail(Err::Precondition, "hom_dim: representations over different fields");
}

struct Checker {
  VerifyReport report{true, {}};

  void add(const std::string& name, bool pass, const std::string& detail) {
    report.checks.push_back({name, pass, detail});
    if (!pass) report.pass = false;
  }
};

}  // namespace

void validate_config(const OracleConfig& cfg) {
  if (cfg.trials < 1) fail(Err::Precondition, "oracle: trials must be >= 1");
  if (cfg.prime <= 1000000 || cfg.prime >= (Int{1} << 31))
    fail(Err::Precondition, "oracle: prime must lie in (10^6, 2^31)");
  // Trial division costs ~sqrt(p) and the same prime is revalidated on
  // every oracle call, so remember the last number that passed.
  static std::atomic<Int> last_good{0};
  if (last_good.load(std::memory_order_relaxed) == cfg.prime) return;
  for (Int d = 2; d * d <= cfg.prime; ++d)
    if (cfg.prime % d == 0)
      fail(Err::Precondition, "oracle: " + std::to_string(cfg.prime) + " is not prime");
  last_good.store(cfg.prime, std::memory_order_relaxed);
}

FieldRep sample_rep(const Quiver& q, const DimVector& dims, const OracleConfig& cfg,
                    Int trial) {
  validate_config(cfg);
  require_dim(q, dims, "sample_rep");
  auto rng = trial_rng(cfg, trial);
  return sample_from(q, dims, cfg.prime, rng);
}

Int hom_dim(const FieldRep& u, const FieldRep& v) {
  check_pair(u, v);
  const Quiver& q = u.quiver;
  const Int p = u.prime;
  const int n = q.vertex_count();
  // Unknowns: the entries of f_a : U_a -> V_a, a matrix with V-rows, U-cols.
  std::vector<Int> offset(static_cast<std::size_t>(n) + 1, 0);
  for (int a = 0; a < n; ++a)
    offset[static_cast<std::size_t>(a) + 1] =
        offset[static_cast<std::size_t>(a)] + u.dims[static_cast<std::size_t>(a)] *
                                                  v.dims[static_cast<std::size_t>(a)];
  const Int unknowns = offset[static_cast<std::size_t>(n)];
  auto col_of = [&](int a, Int vrow, Int ucol) {
    return offset[static_cast<std::size_t>(a)] +
           vrow * u.dims[static_cast<std::size_t>(a)] + ucol;
  };

  // One block of equations per arrow: V(phi) f_t - f_h U(phi) = 0, entrywise
  // over (rows of V_h) x (cols of U_t).  Accumulate with += so that loop
  // arrows, where both terms hit the same unknowns, come out right.
  std::vector<std::vector<Int>> rows;
  for (std::size_t idx = 0; idx < q.arrows().size(); ++idx) {
    const Arrow& arrow = q.arrows()[idx];
    const int t = arrow.tail, h = arrow.head;
    const FieldMatrix& umat = u.matrices[idx];
    const FieldMatrix& vmat = v.matrices[idx];
    const Int ut = u.dims[static_cast<std::size_t>(t)];
    const Int vh = v.dims[static_cast<std::size_t>(h)];
    for (Int r = 0; r < vh; ++r)
      for (Int c = 0; c < ut; ++c) {
        std::vector<Int> row(static_cast<std::size_t>(unknowns), 0);
        for (Int k = 0; k < v.dims[static_cast<std::size_t>(t)]; ++k) {
          Int& cell = row[static_cast<std::size_t>(col_of(t, k, c))];
          cell = (cell + vmat.at(static_cast<int>(r), static_cast<int>(k))) % p;
        }
        for (Int l = 0; l < u.dims[static_cast<std::size_t>(h)]; ++l) {
          Int& cell = row[static_cast<std::size_t>(col_of(h, r, l))];
          cell = (cell - umat.at(static_cast<int>(l), static_cast<int>(c))) % p;
          if (cell < 0) cell += p;
        }
        rows.push_back(std::move(row));
      }
  }
  return unknowns - rank_mod(rows, p);
}

Int oracle_hom(const Quiver& q, const DimVector& a, const DimVector& b,
               const OracleConfig& cfg) {
  validate_config(cfg);
  require_dim(q, a, "oracle_hom");
  require_dim(q, b, "oracle_hom");
  Int best = -1;
  for (Int trial = 0; trial < cfg.trials; ++trial) {
    auto rng = trial_rng(cfg, trial);
    FieldRep u = sample_from(q, a, cfg.prime, rng);
    FieldRep v = sample_from(q, b, cfg.prime, rng);
    Int h = hom_dim(u, v);
    if (best < 0 || h < best) best = h;
  }
  return best;
}

Int oracle_ext(const Quiver& q, const DimVector& a, const DimVector& b,
               const OracleConfig& cfg) {
  Int e = checked_sub(oracle_hom(q, a, b, cfg), euler_form(q, a, b));
  if (e < 0)
    fail(Err::NegativeExt,
         "oracle ext of " + format_vector(a) + ", " + format_vector(b) +
             " came out negative; increase trials");
  return e;
}

Int oracle_end_dim(const Quiver& q, const DimVector& a, const OracleConfig& cfg) {
  validate_config(cfg);
  require_dim(q, a, "oracle_end_dim");
  Int best = -1;
  for (Int trial = 0; trial < cfg.trials; ++trial) {
    auto rng = trial_rng(cfg, trial);
    FieldRep v = sample_from(q, a, cfg.prime, rng);
    Int h = hom_dim(v, v);
    if (best < 0 || h < best) best = h;
  }
  return best;
}

VerifyReport verify_decomposition(const Quiver& q, const std::vector<DecompTerm>& terms,
                                  const DimVector& total, DecompKind kind,
                                  const OracleConfig& cfg) {
  validate_config(cfg);
  require_dim(q, total, "verify_decomposition");
  Checker ck;

  DimVector sum(total.size(), 0);
  bool shape = true;
  for (const auto& term : terms) {
    require_dim(q, term.root, "verify_decomposition");
    if (term.mult < 1 || is_zero(term.root)) shape = false;
    sum = add(sum, scale(term.mult, term.root));
    if (classify_tits_value(tits_form(q, term.root).first) != term.cls) shape = false;
  }
  ck.add("well-formed", shape, "multiplicities >= 1, roots nonzero, classes consistent");
  ck.add("conservation", sum == total,
         "sum of mult*root is " + format_vector(sum) + ", total is " + format_vector(total));

  for (const auto& term : terms) {
    Int end = oracle_end_dim(q, term.root, cfg);
    ck.add("schur " + format_vector(term.root), end == 1,
           "oracle end dim = " + std::to_string(end));
  }

  const std::size_t m = terms.size();
  if (kind == DecompKind::Generic) {
    for (const auto& term : terms) {
      if (term.mult < 2) continue;
      bool strict = tits_form(q, term.root).first < 0;
      ck.add("repeatable " + format_vector(term.root), !strict,
             "strictly imaginary roots cannot repeat");
      Int e = oracle_ext(q, term.root, term.root, cfg);
      ck.add("self-ext " + format_vector(term.root), e == 0,
             "oracle ext = " + std::to_string(e));
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        Int e = oracle_ext(q, terms[i].root, terms[j].root, cfg);
        ck.add("ext " + format_vector(terms[i].root) + " -> " + format_vector(terms[j].root),
               e == 0, "oracle ext = " + std::to_string(e));
      }
  } else {
    bool distinct = true;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j)
        if (terms[i].root == terms[j].root) distinct = false;
    ck.add("distinct roots", distinct, "repeated roots must merge into one member");
    for (const auto& term : terms) {
      RootClass cls = tits_form(q, term.root).second;
      if (cls == RootClass::StrictlyImaginary)
        ck.add("almost loopless " + format_vector(term.root), term.mult == 1,
               "strictly imaginary member must have multiplicity 1");
      if (cls == RootClass::Isotropic && term.mult >= 2) {
        Int h = oracle_hom(q, term.root, term.root, cfg);
        ck.add("self-hom " + format_vector(term.root), h == 0,
               "oracle hom = " + std::to_string(h));
      }
    }
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        if (i == j) continue;
        Int h = oracle_hom(q, terms[i].root, terms[j].root, cfg);
        ck.add("hom " + format_vector(terms[i].root) + " -> " + format_vector(terms[j].root),
               h == 0, "oracle hom = " + std::to_string(h));
        if (i < j) {
          Int e = euler_form(q, terms[j].root, terms[i].root);
          ck.add("euler " + format_vector(terms[j].root) + ", " +
                     format_vector(terms[i].root),
                 e <= 0, "<later, earlier> = " + std::to_string(e));
        }
      }
  }
  return ck.report;
}

}  // namespace quiverkit
