#include "deltaring/linalg.hpp"

#include <algorithm>

#include "deltaring/error.hpp"

namespace deltaring {

Vec zero_vec(Coeffs const& k, std::size_t n) { return Vec(n, k.zero()); }

bool is_zero_vec(std::span<Scalar const> v) {
  return std::all_of(v.begin(), v.end(),
                     [](Scalar const& s) { return s.num == 0; });
}

Vec add(Coeffs const& k, std::span<Scalar const> a,
        std::span<Scalar const> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k.add(a[i], b[i]);
  return out;
}

Vec sub(Coeffs const& k, std::span<Scalar const> a,
        std::span<Scalar const> b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k.sub(a[i], b[i]);
  return out;
}

Vec scale(Coeffs const& k, Scalar c, std::span<Scalar const> a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = k.mul(c, a[i]);
  return out;
}

void axpy(Coeffs const& k, Vec& a, Scalar c, std::span<Scalar const> b) {
  if (k.is_zero(c)) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!k.is_zero(b[i])) a[i] = k.add(a[i], k.mul(c, b[i]));
}

Vec Matrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::set_column(std::size_t c, std::span<Scalar const> v) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vec Matrix::apply(Coeffs const& k, std::span<Scalar const> x) const {
  Vec out = zero_vec(k, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (k.is_zero(x[c])) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      auto const& a = (*this)(r, c);
      if (!k.is_zero(a)) out[r] = k.add(out[r], k.mul(a, x[c]));
    }
  }
  return out;
}

Matrix Matrix::multiply(Coeffs const& k, Matrix const& rhs) const {
  Matrix out(rows_, rhs.cols_);
  for (auto& s : out.data_) s = k.zero();
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t m = 0; m < cols_; ++m) {
      auto const& a = (*this)(r, m);
      if (k.is_zero(a)) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) {
        auto const& b = rhs(m, c);
        if (!k.is_zero(b)) out(r, c) = k.add(out(r, c), k.mul(a, b));
      }
    }
  return out;
}

bool Matrix::is_zero() const { return is_zero_vec(data_); }

Matrix Matrix::identity(Coeffs const& k, std::size_t n) {
  Matrix out(n, n);
  for (auto& s : out.data_) s = k.zero();
  for (std::size_t i = 0; i < n; ++i) out(i, i) = k.one();
  return out;
}

Matrix Matrix::from_columns(std::size_t rows,
                            std::vector<Vec> const& columns) {
  Matrix out(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
    out.set_column(c, columns[c]);
  return out;
}

Matrix Matrix::stack(std::vector<Matrix> const& blocks) {
  if (blocks.empty()) return {};
  std::size_t rows = 0, cols = blocks.front().cols();
  for (auto const& b : blocks) {
    if (b.cols() != cols)
      throw Error(Errc::InvalidArgument, "stack: column mismatch");
    rows += b.rows();
  }
  Matrix out(rows, cols);
  std::size_t r0 = 0;
  for (auto const& b : blocks) {
    std::copy(b.data_.begin(), b.data_.end(),
              out.data_.begin() + static_cast<std::ptrdiff_t>(r0 * cols));
    r0 += b.rows();
  }
  return out;
}

namespace {

std::size_t leading(Vec const& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i].num != 0) return i;
  return v.size();
}

}  // namespace

Span Span::from_generators(Coeffs const& k, std::size_t dim,
                           std::vector<Vec> const& gens) {
  Span out(k, dim);
  std::vector<Vec> work;
  work.reserve(gens.size());
  for (auto const& g : gens) {
    if (g.size() != dim)
      throw Error(Errc::InvalidArgument, "span generator has wrong length");
    if (!is_zero_vec(g)) work.push_back(g);
  }
  // Buckets keyed by leading column keep the sweep linear in the number of
  // columns.
  std::vector<std::vector<Vec>> bucket(dim);
  for (auto& w : work) bucket[leading(w)].push_back(std::move(w));

  for (std::size_t c = 0; c < dim; ++c) {
    auto& rows = bucket[c];
    if (rows.empty()) continue;
    Vec pivot = std::move(rows.front());
    if (k.is_field()) {
      auto u = k.inv(pivot[c]);
      for (std::size_t j = c; j < dim; ++j) pivot[j] = k.mul(u, pivot[j]);
      for (std::size_t i = 1; i < rows.size(); ++i) {
        Vec& r = rows[i];
        auto f = k.neg(r[c]);
        for (std::size_t j = c; j < dim; ++j)
          if (!k.is_zero(pivot[j])) r[j] = k.add(r[j], k.mul(f, pivot[j]));
        auto lead = leading(r);
        if (lead < dim) bucket[lead].push_back(std::move(r));
      }
      rows.clear();
      out.rows_.push_back(std::move(pivot));
      out.pivots_.push_back(c);
      continue;
    }
    for (std::size_t i = 1; i < rows.size(); ++i) {
      Vec& r = rows[i];
      auto step = k.gcd_step(pivot[c], r[c]);
      Vec np(dim), nr(dim);
      for (std::size_t j = c; j < dim; ++j) {
        np[j] = k.add(k.mul(step.s, pivot[j]), k.mul(step.t, r[j]));
        nr[j] = k.add(k.mul(step.x, pivot[j]), k.mul(step.y, r[j]));
      }
      for (std::size_t j = 0; j < c; ++j) np[j] = nr[j] = k.zero();
      pivot = std::move(np);
      auto lead = leading(nr);
      if (lead < dim) bucket[lead].push_back(std::move(nr));
    }
    rows.clear();
    auto u = k.canonical_unit(pivot[c]);
    if (!(u == k.one()))
      for (std::size_t j = c; j < dim; ++j) pivot[j] = k.mul(u, pivot[j]);
    auto a = k.annihilator(pivot[c]);
    if (!k.is_zero(a)) {
      Vec sat = scale(k, a, pivot);
      auto lead = leading(sat);
      if (lead < dim) bucket[lead].push_back(std::move(sat));
    }
    out.rows_.push_back(std::move(pivot));
    out.pivots_.push_back(c);
  }
  // Back-reduction above pivots gives the canonical form.
  for (std::size_t j = 0; j < out.rows_.size(); ++j) {
    auto c = out.pivots_[j];
    auto const g = out.rows_[j][c];
    for (std::size_t i = 0; i < j; ++i) {
      auto q = k.quotient(out.rows_[i][c], g);
      if (!k.is_zero(q)) axpy(k, out.rows_[i], k.neg(q), out.rows_[j]);
    }
  }
  return out;
}

Vec Span::reduce(std::span<Scalar const> v) const {
  Vec out(v.begin(), v.end());
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    auto c = pivots_[j];
    if (k_.is_zero(out[c])) continue;
    auto q = k_.quotient(out[c], rows_[j][c]);
    if (!k_.is_zero(q)) axpy(k_, out, k_.neg(q), rows_[j]);
  }
  return out;
}

bool Span::contains(std::span<Scalar const> v) const {
  return is_zero_vec(reduce(v));
}

bool Span::contains(Span const& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](Vec const& r) { return contains(r); });
}

Span Span::sum(Span const& other) const {
  auto gens = rows_;
  gens.insert(gens.end(), other.rows_.begin(), other.rows_.end());
  return from_generators(k_, dim_, gens);
}

Span Span::intersect(Span const& other) const {
  // x in A ∩ B  <=>  x = a = b; solve via kernel of [A | -B].
  auto na = rows_.size(), nb = other.rows_.size();
  Matrix m(dim_, na + nb);
  for (std::size_t j = 0; j < na; ++j) m.set_column(j, rows_[j]);
  for (std::size_t j = 0; j < nb; ++j)
    m.set_column(na + j, scale(k_, k_.neg(k_.one()), other.rows_[j]));
  auto ker = kernel(k_, m);
  std::vector<Vec> gens;
  for (auto const& r : ker.rows()) {
    Vec x = zero_vec(k_, dim_);
    for (std::size_t j = 0; j < na; ++j) axpy(k_, x, r[j], rows_[j]);
    gens.push_back(std::move(x));
  }
  return from_generators(k_, dim_, gens);
}

int Span::length() const {
  int s = 0;
  for (std::size_t j = 0; j < rows_.size(); ++j)
    s += k_.quotient_length(rows_[j][pivots_[j]]);
  return s;
}

Order Span::order() const {
  if (k_.rational())
    throw Error(Errc::Unsupported, "order of a rational span");
  Order o;
  for (std::size_t j = 0; j < rows_.size(); ++j)
    o *= factorize(k_.additive_order(rows_[j][pivots_[j]]));
  return o;
}

std::vector<Vec> Span::unit_pivot_rows() const {
  std::vector<Vec> out;
  for (std::size_t j = 0; j < rows_.size(); ++j)
    if (k_.is_unit(rows_[j][pivots_[j]])) out.push_back(rows_[j]);
  return out;
}

Span kernel(Coeffs const& k, Matrix const& a) {
  // Howell form of [A^T | I]; rows vanishing on the first block span the
  // kernel (the Howell property guarantees completeness over ℤ/m).
  auto const n = a.rows(), c = a.cols();
  std::vector<Vec> gens;
  gens.reserve(c);
  for (std::size_t j = 0; j < c; ++j) {
    Vec row = zero_vec(k, n + c);
    for (std::size_t i = 0; i < n; ++i) row[i] = a(i, j);
    row[n + j] = k.one();
    gens.push_back(std::move(row));
  }
  auto h = Span::from_generators(k, n + c, gens);
  std::vector<Vec> ker;
  for (std::size_t j = 0; j < h.rows().size(); ++j) {
    if (h.pivots()[j] < n) continue;
    ker.emplace_back(h.rows()[j].begin() + static_cast<std::ptrdiff_t>(n),
                     h.rows()[j].end());
  }
  return Span::from_generators(k, c, ker);
}

Span image(Coeffs const& k, Matrix const& a) {
  std::vector<Vec> cols;
  cols.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
  return Span::from_generators(k, a.rows(), cols);
}

Span preimage(Coeffs const& k, Matrix const& a, Span const& target) {
  auto const c = a.cols();
  auto const& t = target.rows();
  Matrix m(a.rows(), c + t.size());
  for (std::size_t j = 0; j < c; ++j) m.set_column(j, a.column(j));
  for (std::size_t j = 0; j < t.size(); ++j)
    m.set_column(c + j, scale(k, k.neg(k.one()), t[j]));
  auto ker = kernel(k, m);
  std::vector<Vec> gens;
  for (auto const& r : ker.rows())
    gens.emplace_back(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(c));
  return Span::from_generators(k, c, gens);
}

std::optional<Vec> solve(Coeffs const& k, Matrix const& a,
                         std::span<Scalar const> b) {
  // Rows (A e_j ; 0 ; e_j) and (-b ; 1 ; 0): a solution exists iff the
  // Howell form has a kernel row whose λ-pivot is a unit.
  auto const n = a.rows(), c = a.cols();
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < c; ++j) {
    Vec row = zero_vec(k, n + 1 + c);
    for (std::size_t i = 0; i < n; ++i) row[i] = a(i, j);
    row[n + 1 + j] = k.one();
    gens.push_back(std::move(row));
  }
  Vec last = zero_vec(k, n + 1 + c);
  for (std::size_t i = 0; i < n; ++i) last[i] = k.neg(b[i]);
  last[n] = k.one();
  gens.push_back(std::move(last));
  auto h = Span::from_generators(k, n + 1 + c, gens);
  for (std::size_t j = 0; j < h.rows().size(); ++j) {
    if (h.pivots()[j] != n) continue;
    auto const& row = h.rows()[j];
    if (!k.is_unit(row[n])) return std::nullopt;
    auto u = k.inv(row[n]);
    Vec x(c);
    for (std::size_t i = 0; i < c; ++i) x[i] = k.mul(u, row[n + 1 + i]);
    return x;
  }
  return std::nullopt;
}

std::size_t rank(Coeffs const& k, Matrix const& a) {
  return image(k, a).rows().size();
}

}  // namespace deltaring
