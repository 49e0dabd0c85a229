#include "brauer/zlattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "brauer/error.hpp"

namespace brauer {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, BigInt(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorCode::InvalidInput, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) fail(ErrorCode::InvalidInput, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

void IntMatrix::append_row(std::span<const BigInt> values) {
  if (values.size() != cols_) fail(ErrorCode::InvalidInput, "row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(ErrorCode::InvalidInput, "matrix product dimension mismatch");
  IntMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool IntMatrix::operator==(const IntMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

IntMatrix IntMatrix::vstack(const IntMatrix& top, const IntMatrix& bottom) {
  if (top.cols_ != bottom.cols_) fail(ErrorCode::InvalidInput, "vstack column mismatch");
  IntMatrix out = top;
  out.data_.insert(out.data_.end(), bottom.data_.begin(), bottom.data_.end());
  out.rows_ += bottom.rows_;
  return out;
}

IntVector multiply(const IntVector& x, const IntMatrix& m) {
  if (x.size() != m.rows()) fail(ErrorCode::InvalidInput, "vector/matrix dimension mismatch");
  IntVector out(m.cols(), BigInt(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += x[i] * m(i, j);
  }
  return out;
}

BigInt determinant(const IntMatrix& input) {
  if (input.rows() != input.cols()) fail(ErrorCode::InvalidInput, "determinant of non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Smith normal form

namespace {

int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

struct SmithWork {
  IntMatrix A, U, V, Vi;

  // row_i += c * row_k
  void row_add(std::size_t i, std::size_t k, const BigInt& c) {
    for (std::size_t j = 0; j < A.cols(); ++j)
      if (A(k, j) != 0) A(i, j) += c * A(k, j);
    for (std::size_t j = 0; j < U.cols(); ++j)
      if (U(k, j) != 0) U(i, j) += c * U(k, j);
  }
  // col_j += c * col_k
  void col_add(std::size_t j, std::size_t k, const BigInt& c) {
    for (std::size_t i = 0; i < A.rows(); ++i)
      if (A(i, k) != 0) A(i, j) += c * A(i, k);
    for (std::size_t i = 0; i < V.rows(); ++i)
      if (V(i, k) != 0) V(i, j) += c * V(i, k);
    for (std::size_t l = 0; l < Vi.cols(); ++l)
      if (Vi(j, l) != 0) Vi(k, l) -= c * Vi(j, l);
  }
  void row_swap(std::size_t a, std::size_t b) {
    A.swap_rows(a, b);
    U.swap_rows(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    A.swap_cols(a, b);
    V.swap_cols(a, b);
    Vi.swap_rows(a, b);
  }
  void row_negate(std::size_t i) {
    for (std::size_t j = 0; j < A.cols(); ++j) A(i, j) = -A(i, j);
    for (std::size_t j = 0; j < U.cols(); ++j) U(i, j) = -U(i, j);
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithWork w{m, IntMatrix::identity(rows), IntMatrix::identity(cols),
              IntMatrix::identity(cols)};
  IntMatrix& A = w.A;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pi = rows, pj = cols;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (A(i, j) == 0) continue;
        if (pi == rows || cmpabs(A(i, j), A(pi, pj)) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == rows) break;
    w.row_swap(t, pi);
    w.col_swap(t, pj);

    for (;;) {
      bool dirty = false;
      BigInt q;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (A(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), A(i, t).get_mpz_t(), A(t, t).get_mpz_t());
        if (q != 0) w.row_add(i, t, -q);
        if (A(i, t) != 0) dirty = true;
      }
      if (dirty) {
        std::size_t best = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (A(i, t) != 0 && (best == t || cmpabs(A(i, t), A(best, t)) < 0)) best = i;
        w.row_swap(t, best);
        continue;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (A(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), A(t, j).get_mpz_t(), A(t, t).get_mpz_t());
        if (q != 0) w.col_add(j, t, -q);
        if (A(t, j) != 0) dirty = true;
      }
      if (dirty) {
        std::size_t best = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (A(t, j) != 0 && (best == t || cmpabs(A(t, j), A(t, best)) < 0)) best = j;
        w.col_swap(t, best);
        continue;
      }
      // Divisibility chain: pull in any entry the pivot does not divide.
      bool pulled = false;
      for (std::size_t i = t + 1; i < rows && !pulled; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(A(i, j).get_mpz_t(), A(t, t).get_mpz_t())) {
            w.row_add(t, i, 1);
            pulled = true;
            break;
          }
      if (!pulled) break;
    }
    if (A(t, t) < 0) w.row_negate(t);
  }
  return SmithForm{std::move(w.U), std::move(w.A), std::move(w.V), std::move(w.Vi)};
}

std::size_t SmithForm::rank() const {
  std::size_t r = 0;
  while (r < std::min(D.rows(), D.cols()) && D(r, r) != 0) ++r;
  return r;
}

BigInt SmithForm::diagonal(std::size_t i) const {
  if (i < std::min(D.rows(), D.cols())) return D(i, i);
  return 0;
}

// ---------------------------------------------------------------------------
// Fingerprint

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < invariants.size(); ++i) os << (i ? "," : "") << invariants[i];
  os << "]";
  if (free_rank) os << "+Z^" << free_rank;
  return os.str();
}

std::optional<BigInt> Fingerprint::order() const {
  if (free_rank) return std::nullopt;
  BigInt o = 1;
  for (const auto& d : invariants) o *= d;
  return o;
}

Fingerprint prime_to_part(const Fingerprint& fp, long p) {
  Fingerprint out;
  out.free_rank = fp.free_rank;
  for (BigInt d : fp.invariants) {
    while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) d /= p;
    if (d > 1) out.invariants.push_back(d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// AbelianGroup

AbelianGroup::AbelianGroup() : ngens_(0), relations_(0, 0) { normalize(); }

AbelianGroup::AbelianGroup(std::size_t ngens, IntMatrix relations)
    : ngens_(ngens), relations_(std::move(relations)) {
  if (relations_.rows() == 0) relations_ = IntMatrix(0, ngens_);
  if (relations_.cols() != ngens_)
    fail(ErrorCode::InvalidInput, "relation matrix has wrong number of columns");
  normalize();
}

AbelianGroup AbelianGroup::from_orders(const std::vector<BigInt>& orders) {
  IntMatrix rel(0, orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] < 0) fail(ErrorCode::InvalidInput, "negative cyclic order");
    if (orders[i] == 0) continue;
    IntVector row(orders.size(), BigInt(0));
    row[i] = orders[i];
    rel.append_row(row);
  }
  return AbelianGroup(orders.size(), std::move(rel));
}

void AbelianGroup::normalize() {
  SmithForm snf = smith_normal_form(relations_);
  invariants_.clear();
  columns_.clear();
  free_rank_ = 0;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < ngens_; ++j) {
    BigInt d = snf.diagonal(j);
    if (d == 0) {
      free_cols.push_back(j);
    } else if (d != 1) {
      invariants_.push_back(d);
      columns_.push_back(j);
    }
  }
  free_rank_ = free_cols.size();
  columns_.insert(columns_.end(), free_cols.begin(), free_cols.end());
  V_ = std::move(snf.V);
  V_inv_ = std::move(snf.V_inv);
}

std::optional<BigInt> AbelianGroup::order() const { return fingerprint().order(); }

std::optional<BigInt> AbelianGroup::exponent() const {
  if (free_rank_) return std::nullopt;
  BigInt e = 1;
  for (const auto& d : invariants_) e = lcm(e, d);
  return e;
}

IntVector AbelianGroup::normal_coords(const IntVector& x) const {
  if (x.size() != ngens_) fail(ErrorCode::InvalidInput, "element has wrong length");
  IntVector y = multiply(x, V_);
  IntVector out;
  out.reserve(columns_.size());
  for (std::size_t k = 0; k < columns_.size(); ++k) {
    BigInt v = y[columns_[k]];
    if (k < invariants_.size()) {
      const BigInt& d = invariants_[k];
      mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
    }
    out.push_back(v);
  }
  return out;
}

bool AbelianGroup::is_zero(const IntVector& x) const {
  IntVector c = normal_coords(x);
  return std::all_of(c.begin(), c.end(), [](const BigInt& v) { return v == 0; });
}

IntVector AbelianGroup::normal_generator(std::size_t j) const {
  if (j >= columns_.size()) fail(ErrorCode::InvalidInput, "normal generator index out of range");
  return V_inv_.row(columns_[j]);
}

// ---------------------------------------------------------------------------
// Homomorphisms

AbelianHom::AbelianHom(AbelianGroup source, AbelianGroup target, IntMatrix matrix)
    : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)) {
  if (matrix_.rows() == 0 && matrix_.cols() == 0)
    matrix_ = IntMatrix(source_.ngens(), target_.ngens());
  if (matrix_.rows() != source_.ngens() || matrix_.cols() != target_.ngens())
    fail(ErrorCode::NotAHomomorphism, "matrix shape does not match source/target generators");
  const IntMatrix& rel = source_.relations();
  for (std::size_t i = 0; i < rel.rows(); ++i)
    if (!target_.is_zero(multiply(rel.row(i), matrix_)))
      fail(ErrorCode::NotAHomomorphism,
           "source relation " + std::to_string(i) + " does not map into the target relations");
}

bool AbelianHom::is_zero() const {
  for (std::size_t i = 0; i < matrix_.rows(); ++i)
    if (!target_.is_zero(matrix_.row(i))) return false;
  return true;
}

AbelianHom AbelianHom::reinterpret(AbelianGroup source, AbelianGroup target) const {
  return AbelianHom(std::move(source), std::move(target), matrix_);
}

AbelianHom compose(const AbelianHom& f, const AbelianHom& g) {
  if (f.target().ngens() != g.source().ngens())
    fail(ErrorCode::InvalidInput, "composition of incompatible homomorphisms");
  return AbelianHom(f.source(), g.target(), f.matrix() * g.matrix());
}

AbelianHom identity_hom(const AbelianGroup& a) {
  return AbelianHom(a, a, IntMatrix::identity(a.ngens()));
}

namespace {

// Sublattice of Z^n spanned by the rows of a generator matrix, with a basis
// and exact coordinates.
struct Lattice {
  std::size_t dim = 0;
  std::vector<IntVector> basis;
  std::vector<BigInt> scale;  // basis[i] = scale[i] * row i of V^{-1}
  IntMatrix V;

  explicit Lattice(const IntMatrix& generators) : dim(generators.cols()) {
    SmithForm snf = smith_normal_form(generators);
    const std::size_t r = snf.rank();
    for (std::size_t i = 0; i < r; ++i) {
      IntVector b = snf.V_inv.row(i);
      for (auto& v : b) v *= snf.D(i, i);
      basis.push_back(std::move(b));
      scale.push_back(snf.D(i, i));
    }
    V = std::move(snf.V);
  }

  IntVector coords(const IntVector& w) const {
    IntVector y = multiply(w, V);
    IntVector c(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!mpz_divisible_p(y[i].get_mpz_t(), scale[i].get_mpz_t()))
        fail(ErrorCode::InvalidInput, "vector is not in the lattice");
      mpz_divexact(c[i].get_mpz_t(), y[i].get_mpz_t(), scale[i].get_mpz_t());
    }
    for (std::size_t i = basis.size(); i < y.size(); ++i)
      if (y[i] != 0) fail(ErrorCode::InvalidInput, "vector is not in the lattice");
    return c;
  }
};

// Rows generating {x in Z^nA : x * M is zero in the target}.
IntMatrix kernel_lattice(const AbelianHom& f) {
  const AbelianGroup& b = f.target();
  const std::size_t na = f.source().ngens();
  const std::size_t k = b.normal_rank();
  if (k == 0) return IntMatrix::identity(na);

  // Express images in the target's normal coordinates without reducing them.
  IntMatrix images(na, k);
  for (std::size_t i = 0; i < na; ++i) {
    IntVector img = f.matrix().row(i);
    // Normal coordinates, but unreduced: x * (columns of V).
    IntVector e(b.ngens(), BigInt(0));
    IntVector c = b.normal_coords(img);
    for (std::size_t j = 0; j < k; ++j) images(i, j) = c[j];
  }
  IntMatrix stacked = images;
  for (std::size_t j = 0; j < b.invariant_factors().size(); ++j) {
    IntVector row(k, BigInt(0));
    row[j] = b.invariant_factors()[j];
    stacked.append_row(row);
  }
  SmithForm snf = smith_normal_form(stacked);
  const std::size_t r = snf.rank();
  IntMatrix out(0, na);
  for (std::size_t i = r; i < stacked.rows(); ++i) {
    IntVector row(na);
    for (std::size_t j = 0; j < na; ++j) row[j] = snf.U(i, j);
    out.append_row(row);
  }
  return out;
}

}  // namespace

KernelResult hom_kernel(const AbelianHom& f) {
  const AbelianGroup& a = f.source();
  IntMatrix gens = kernel_lattice(f);
  Lattice lat(gens);
  IntMatrix rel(0, lat.basis.size());
  for (std::size_t i = 0; i < a.relations().rows(); ++i) rel.append_row(lat.coords(a.relations().row(i)));
  AbelianGroup k(lat.basis.size(), std::move(rel));
  IntMatrix incl = IntMatrix::from_rows(lat.basis, a.ngens());
  if (lat.basis.empty()) incl = IntMatrix(0, a.ngens());
  AbelianHom inclusion(k, a, std::move(incl));
  return KernelResult{std::move(k), std::move(inclusion)};
}

CokernelResult hom_cokernel(const AbelianHom& f) {
  const AbelianGroup& b = f.target();
  IntMatrix rel = IntMatrix::vstack(b.relations(), f.matrix());
  AbelianGroup c(b.ngens(), std::move(rel));
  AbelianHom proj(b, c, IntMatrix::identity(b.ngens()));
  return CokernelResult{std::move(c), std::move(proj)};
}

AbelianGroup hom_image(const AbelianHom& f) {
  const AbelianGroup& a = f.source();
  IntMatrix rel = IntMatrix::vstack(a.relations(), kernel_lattice(f));
  return AbelianGroup(a.ngens(), std::move(rel));
}

AbelianGroup quotient_mod_n(const AbelianGroup& a, const BigInt& n) {
  if (n < 1) fail(ErrorCode::InvalidInput, "quotient_mod_n requires n >= 1");
  IntMatrix rel = a.relations();
  for (std::size_t i = 0; i < a.ngens(); ++i) {
    IntVector row(a.ngens(), BigInt(0));
    row[i] = n;
    rel.append_row(row);
  }
  return AbelianGroup(a.ngens(), std::move(rel));
}

AbelianGroup direct_sum_group(const std::vector<AbelianGroup>& groups) {
  std::size_t total = 0;
  for (const auto& g : groups) total += g.ngens();
  IntMatrix rel(0, total);
  std::size_t offset = 0;
  for (const auto& g : groups) {
    for (std::size_t i = 0; i < g.relations().rows(); ++i) {
      IntVector row(total, BigInt(0));
      for (std::size_t j = 0; j < g.ngens(); ++j) row[offset + j] = g.relations()(i, j);
      rel.append_row(row);
    }
    offset += g.ngens();
  }
  return AbelianGroup(total, std::move(rel));
}

DirectSum direct_sum(const std::vector<AbelianGroup>& groups) {
  DirectSum out{direct_sum_group(groups), {}, {}};
  const std::size_t total = out.group.ngens();
  std::size_t offset = 0;
  for (const auto& g : groups) {
    IntMatrix inj(g.ngens(), total);
    IntMatrix proj(total, g.ngens());
    for (std::size_t j = 0; j < g.ngens(); ++j) {
      inj(j, offset + j) = 1;
      proj(offset + j, j) = 1;
    }
    out.injections.emplace_back(g, out.group, std::move(inj));
    out.projections.emplace_back(out.group, g, std::move(proj));
    offset += g.ngens();
  }
  return out;
}

AbelianHom assemble(const AbelianGroup& source, const std::vector<AbelianHom>& parts,
                    const DirectSum& target) {
  if (parts.size() != target.injections.size())
    fail(ErrorCode::InvalidInput, "assemble: part count does not match the direct sum");
  return assemble(source, parts, target.group);
}

AbelianHom assemble(const AbelianGroup& source, const std::vector<AbelianHom>& parts,
                    const AbelianGroup& target) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.target().ngens();
  if (total != target.ngens())
    fail(ErrorCode::InvalidInput, "assemble: parts do not cover the direct sum");
  IntMatrix m(source.ngens(), target.ngens());
  std::size_t offset = 0;
  for (const auto& p : parts) {
    if (p.source().ngens() != source.ngens())
      fail(ErrorCode::InvalidInput, "assemble: part has a different source");
    for (std::size_t i = 0; i < source.ngens(); ++i)
      for (std::size_t j = 0; j < p.target().ngens(); ++j) m(i, offset + j) = p.matrix()(i, j);
    offset += p.target().ngens();
  }
  return AbelianHom(source, target, std::move(m));
}

// ---------------------------------------------------------------------------
// Residues

Residue mod_reduce(Residue a, Residue n) {
  Residue r = a % n;
  return r < 0 ? r + n : r;
}

Residue gcd_residue(Residue a, Residue b) { return std::gcd(a, b); }

namespace {

Residue mulmod(Residue a, Residue b, Residue n) {
  return static_cast<Residue>((static_cast<__int128>(a) * b) % n);
}

struct ExtGcd {
  Residue g, x, y;
};

ExtGcd ext_gcd(Residue a, Residue b) {
  Residue old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Residue q = old_r / r;
    Residue tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  return {old_r, old_s, old_t};
}

}  // namespace

Residue mod_inverse(Residue a, Residue n) {
  if (n == 1) return 0;
  ExtGcd e = ext_gcd(mod_reduce(a, n), n);
  if (e.g != 1) fail(ErrorCode::InvalidInput, "mod_inverse of a non-unit");
  return mod_reduce(e.x, n);
}

// ---------------------------------------------------------------------------
// ModularKernel

namespace {

using Row = std::vector<Residue>;

// row -= c * src  (mod n)
void axpy(Row& row, const Row& src, Residue c, Residue n) {
  if (c == 0) return;
  for (std::size_t j = 0; j < row.size(); ++j)
    if (src[j] != 0) row[j] = mod_reduce(row[j] - mulmod(c, src[j], n), n);
}

bool is_zero_row(const Row& r) {
  return std::all_of(r.begin(), r.end(), [](Residue v) { return v == 0; });
}

// A unit u with u = a/g (mod n/g), g = gcd(a, n).
Residue associate_unit(Residue a, Residue g, Residue n) {
  const Residue step = n / g;
  Residue u = (a / g) % step;
  for (Residue k = 0;; ++k) {
    Residue cand = u + k * step;
    if (std::gcd(cand, n) == 1) return cand % n;
  }
}

// Diagonalizes A (rows x cols, residues mod n) by unimodular row and column
// operations; returns per-column diagonal ideals (divisors of n, n for zero)
// and the column transform with its inverse.
struct ModSmith {
  std::vector<Residue> diag;
  std::vector<Row> V;      // cols x cols
  std::vector<Row> V_inv;  // cols x cols
};

ModSmith smith_mod(std::vector<Row> A, std::size_t cols, Residue n) {
  const std::size_t rows = A.size();
  ModSmith out;
  out.diag.assign(cols, n);
  out.V.assign(cols, Row(cols, 0));
  out.V_inv.assign(cols, Row(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) out.V[i][i] = out.V_inv[i][i] = (n == 1 ? 0 : 1);
  if (n == 1) return out;

  auto col_swap = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (auto& r : A) std::swap(r[a], r[b]);
    for (auto& r : out.V) std::swap(r[a], r[b]);
    std::swap(out.V_inv[a], out.V_inv[b]);
  };
  // col_j -= c * col_t
  auto col_sub = [&](std::size_t j, std::size_t t, Residue c) {
    if (c == 0) return;
    for (auto& r : A) r[j] = mod_reduce(r[j] - mulmod(c, r[t], n), n);
    for (auto& r : out.V) r[j] = mod_reduce(r[j] - mulmod(c, r[t], n), n);
    // inverse: row_t += c * row_j
    for (std::size_t l = 0; l < cols; ++l)
      out.V_inv[t][l] = mod_reduce(out.V_inv[t][l] + mulmod(c, out.V_inv[j][l], n), n);
  };
  // 2x2 unimodular column combination on (t, j) clearing A[t][j].
  auto col_bezout = [&](std::size_t t, std::size_t j) {
    Residue g = A[t][t], b = A[t][j];
    ExtGcd e = ext_gcd(g, b);
    Residue h = e.g, x = mod_reduce(e.x, n), y = mod_reduce(e.y, n);
    Residue bh = (b / h) % n, gh = (g / h) % n;
    auto mix = [&](Residue& ct, Residue& cj) {
      Residue nt = mod_reduce(mulmod(x, ct, n) + mulmod(y, cj, n), n);
      Residue nj = mod_reduce(mulmod(gh, cj, n) - mulmod(bh, ct, n), n);
      ct = nt;
      cj = nj;
    };
    for (auto& r : A) mix(r[t], r[j]);
    for (auto& r : out.V) mix(r[t], r[j]);
    // inverse block [[g/h, b/h], [-y, x]] applied to rows t, j
    for (std::size_t l = 0; l < cols; ++l) {
      Residue rt = out.V_inv[t][l], rj = out.V_inv[j][l];
      out.V_inv[t][l] = mod_reduce(mulmod(gh, rt, n) + mulmod(bh, rj, n), n);
      out.V_inv[j][l] = mod_reduce(mulmod(x, rj, n) - mulmod(y, rt, n), n);
    }
  };
  auto row_bezout = [&](std::size_t t, std::size_t i) {
    Residue g = A[t][t], b = A[i][t];
    ExtGcd e = ext_gcd(g, b);
    Residue h = e.g, x = mod_reduce(e.x, n), y = mod_reduce(e.y, n);
    Residue bh = (b / h) % n, gh = (g / h) % n;
    for (std::size_t l = 0; l < cols; ++l) {
      Residue rt = A[t][l], ri = A[i][l];
      A[t][l] = mod_reduce(mulmod(x, rt, n) + mulmod(y, ri, n), n);
      A[i][l] = mod_reduce(mulmod(gh, ri, n) - mulmod(bh, rt, n), n);
    }
  };
  auto normalize_pivot = [&](std::size_t t) {
    Residue a = A[t][t];
    Residue g = std::gcd(a, n);
    if (a == g) return;
    Residue u = associate_unit(a, g, n);
    Residue inv = mod_inverse(u, n);
    for (auto& v : A[t]) v = mulmod(v, inv, n);
  };

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    std::size_t pi = rows, pj = cols;
    Residue best = n;
    for (std::size_t i = t; i < rows && best != 1; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (A[i][j] == 0) continue;
        Residue g = std::gcd(A[i][j], n);
        if (g < best) {
          best = g;
          pi = i;
          pj = j;
          if (g == 1) break;
        }
      }
    if (pi == rows) break;
    std::swap(A[t], A[pi]);
    col_swap(t, pj);
    normalize_pivot(t);

    for (bool dirty = true; dirty;) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        Residue b = A[i][t];
        if (b == 0) continue;
        if (b % A[t][t] != 0) {
          row_bezout(t, i);
          normalize_pivot(t);
        }
        axpy(A[i], A[t], A[i][t] / A[t][t], n);
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        Residue b = A[t][j];
        if (b == 0) continue;
        if (b % A[t][t] != 0) {
          col_bezout(t, j);
          normalize_pivot(t);
          dirty = true;  // the column may have been refilled
        }
        col_sub(j, t, A[t][j] / A[t][t]);
      }
      for (std::size_t i = t + 1; i < rows && !dirty; ++i)
        if (A[i][t] != 0) dirty = true;
    }
    out.diag[t] = A[t][t];
  }
  return out;
}

}  // namespace

ModularKernel::ModularKernel(std::size_t ncols, Residue modulus)
    : modulus_(modulus), ncols_(ncols), pivot_of_(ncols, -1) {
  if (modulus < 1) fail(ErrorCode::InvalidInput, "modulus must be positive");
}

ModularKernel::ModularKernel(std::vector<std::vector<Residue>> rows, std::size_t ncols,
                             Residue modulus)
    : ModularKernel(ncols, modulus) {
  for (auto& r : rows) add_row(std::move(r));
  finalize();
}

void ModularKernel::reduce(Row& r) const {
  for (std::size_t p = 0; p < pivot_rows_.size(); ++p) {
    Residue c = r[pivot_cols_[p]];
    if (c != 0) axpy(r, pivot_rows_[p], c, modulus_);
  }
}

long ModularKernel::find_unit(const Row& r) const {
  const Residue n = modulus_;
  long any = -1;
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (r[j] == 0) continue;
    if (r[j] == 1 || r[j] == n - 1) return static_cast<long>(j);
    if (any < 0 && std::gcd(r[j], n) == 1) any = static_cast<long>(j);
  }
  return any;
}

void ModularKernel::add_pivot(Row r, std::size_t c) {
  const Residue n = modulus_;
  Residue inv = mod_inverse(r[c], n);
  if (inv != 1)
    for (auto& v : r) v = mulmod(v, inv, n);
  for (auto& p : pivot_rows_) axpy(p, r, p[c], n);
  pivot_of_[c] = static_cast<long>(pivot_rows_.size());
  pivot_cols_.push_back(c);
  pivot_rows_.push_back(std::move(r));
}

void ModularKernel::add_row(Row r) {
  if (finalized_) fail(ErrorCode::InvalidInput, "add_row after finalize");
  if (r.size() != ncols_) fail(ErrorCode::InvalidInput, "row length mismatch in kernel");
  if (modulus_ == 1) return;
  for (auto& v : r) v = mod_reduce(v, modulus_);
  reduce(r);
  long u = find_unit(r);
  if (u >= 0)
    add_pivot(std::move(r), static_cast<std::size_t>(u));
  else if (!is_zero_row(r))
    core_.push_back(std::move(r));
}

void ModularKernel::finalize() {
  if (finalized_) return;
  finalized_ = true;
  const Residue n = modulus_;
  // Later pivots may expose units in earlier core rows.
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Row> next;
    for (auto& r : core_) {
      reduce(r);
      long u = find_unit(r);
      if (u >= 0) {
        add_pivot(std::move(r), static_cast<std::size_t>(u));
        changed = true;
      } else if (!is_zero_row(r)) {
        next.push_back(std::move(r));
      }
    }
    core_ = std::move(next);
  }
  for (auto& r : core_) reduce(r);
  std::sort(core_.begin(), core_.end());
  core_.erase(std::unique(core_.begin(), core_.end()), core_.end());
  core_rows_ = core_.size();

  for (std::size_t j = 0; j < ncols_; ++j)
    if (pivot_of_[j] < 0) free_cols_.push_back(j);
  const std::size_t nf = free_cols_.size();
  std::vector<Row> core_free;
  core_free.reserve(core_.size());
  for (const auto& r : core_) {
    Row f(nf);
    for (std::size_t k = 0; k < nf; ++k) f[k] = r[free_cols_[k]];
    core_free.push_back(std::move(f));
  }
  core_.clear();
  ModSmith ms = smith_mod(std::move(core_free), nf, n);
  diag_ = ms.diag;
  v_inv_ = std::move(ms.V_inv);

  for (std::size_t i = 0; i < nf; ++i) {
    const Residue g = diag_[i];
    if (g == 1 || n == 1) continue;
    const Residue scale = n / g;
    Row x(ncols_, 0);
    for (std::size_t k = 0; k < nf; ++k) x[free_cols_[k]] = mulmod(scale, ms.V[k][i], n);
    for (std::size_t p = 0; p < pivot_rows_.size(); ++p) {
      Residue acc = 0;
      for (std::size_t k = 0; k < nf; ++k) {
        Residue c = pivot_rows_[p][free_cols_[k]];
        if (c) acc = mod_reduce(acc + mulmod(c, x[free_cols_[k]], n), n);
      }
      x[pivot_cols_[p]] = mod_reduce(-acc, n);
    }
    generators_.push_back(std::move(x));
    orders_.push_back(g);
    gen_index_.push_back(i);
  }
}

bool ModularKernel::contains(const std::vector<Residue>& x) const {
  try {
    (void)coords(x);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<Residue> ModularKernel::coords(const std::vector<Residue>& raw) const {
  if (!finalized_) fail(ErrorCode::InvalidInput, "kernel queried before finalize");
  const Residue n = modulus_;
  if (raw.size() != ncols_) fail(ErrorCode::InvalidInput, "vector length mismatch in kernel coords");
  if (n == 1) return {};
  Row x(ncols_);
  for (std::size_t j = 0; j < ncols_; ++j) x[j] = mod_reduce(raw[j], n);
  const std::size_t nf = free_cols_.size();
  for (std::size_t p = 0; p < pivot_rows_.size(); ++p) {
    Residue acc = 0;
    for (std::size_t k = 0; k < nf; ++k) {
      Residue c = pivot_rows_[p][free_cols_[k]];
      if (c) acc = mod_reduce(acc + mulmod(c, x[free_cols_[k]], n), n);
    }
    if (mod_reduce(x[pivot_cols_[p]] + acc, n) != 0)
      fail(ErrorCode::InvalidInput, "vector is not in the kernel");
  }
  std::vector<Residue> y(nf, 0);
  for (std::size_t i = 0; i < nf; ++i) {
    Residue acc = 0;
    for (std::size_t k = 0; k < nf; ++k) {
      Residue c = v_inv_[i][k];
      if (c) acc = mod_reduce(acc + mulmod(c, x[free_cols_[k]], n), n);
    }
    y[i] = acc;
  }
  for (std::size_t i = 0; i < nf; ++i) {
    const Residue scale = n / diag_[i];
    if (y[i] % scale != 0) fail(ErrorCode::InvalidInput, "vector is not in the kernel");
  }
  std::vector<Residue> c;
  c.reserve(generators_.size());
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    std::size_t i = gen_index_[g];
    c.push_back((y[i] / (n / diag_[i])) % orders_[g]);
  }
  return c;
}

}  // namespace brauer
