#include "fdrep/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace fdrep {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto check_int = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i >= part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num = num.substr(1);
  if (!check_int(num) || !check_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + s + "'");
  Integer n(num), d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column_vector(const std::vector<Rational>& entries) {
  Matrix m(entries.size(), 1);
  m.data_ = entries;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("matrix block out of range");
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::out_of_range("matrix block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix m(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(i, cols[j]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix m(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(rows[i], j);
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(o.data_[i]) != 0) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (sgn(o.data_[i]) != 0) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                                std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                                std::to_string(b.cols_));
  Matrix c(a.rows_, b.cols_);
  Rational t;
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        t = aik * bkj;
        c(i, j) += t;
      }
    }
  return c;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

Matrix hcat(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix vcat(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vcat column mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix hcat(const std::vector<Matrix>& parts, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw std::invalid_argument("hcat row mismatch");
    cols += p.cols();
  }
  Matrix m(rows, cols);
  std::size_t c = 0;
  for (const auto& p : parts) {
    m.set_block(0, c, p);
    c += p.cols();
  }
  return m;
}

Matrix vcat(const std::vector<Matrix>& parts, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw std::invalid_argument("vcat column mismatch");
    rows += p.rows();
  }
  Matrix m(rows, cols);
  std::size_t r = 0;
  for (const auto& p : parts) {
    m.set_block(r, 0, p);
    r += p.rows();
  }
  return m;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  Matrix m(rows, cols);
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

Matrix flatten(const Matrix& m) { return Matrix::column_vector(m.data()); }

RrefResult rref(const Matrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  // Scale each row to integers.
  std::vector<std::vector<Integer>> a(R, std::vector<Integer>(C));
  for (std::size_t r = 0; r < R; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < C; ++c)
      if (sgn(m(r, c)) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < C; ++c)
      if (sgn(m(r, c)) != 0) a[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }

  std::vector<std::size_t> pivots;
  Integer prev = 1;
  Integer t;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < C && pr < R; ++c) {
    std::size_t p = pr;
    while (p < R && sgn(a[p][c]) == 0) ++p;
    if (p == R) continue;
    std::swap(a[p], a[pr]);
    const Integer& piv = a[pr][c];
    for (std::size_t r = pr + 1; r < R; ++r) {
      const bool zero_lead = sgn(a[r][c]) == 0;
      for (std::size_t k = c + 1; k < C; ++k) {
        if (zero_lead) {
          if (sgn(a[r][k]) == 0) continue;
          t = piv * a[r][k];
        } else {
          t = piv * a[r][k] - a[r][c] * a[pr][k];
        }
        mpz_divexact(a[r][k].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = piv;
    pivots.push_back(c);
    ++pr;
  }

  Matrix form(R, C);
  const std::size_t rk = pivots.size();
  for (std::size_t i = 0; i < rk; ++i) {
    const Integer& piv = a[i][pivots[i]];
    for (std::size_t c = pivots[i]; c < C; ++c)
      if (sgn(a[i][c]) != 0) {
        form(i, c) = Rational(a[i][c], piv);
        form(i, c).canonicalize();
      }
  }
  Rational f;
  for (std::size_t i = rk; i-- > 0;) {
    const std::size_t pc = pivots[i];
    for (std::size_t j = 0; j < i; ++j) {
      if (sgn(form(j, pc)) == 0) continue;
      f = form(j, pc);
      for (std::size_t c = pc; c < C; ++c)
        if (sgn(form(i, c)) != 0) form(j, c) -= f * form(i, c);
    }
  }
  return {std::move(form), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<std::size_t> free_columns(const Matrix& m) {
  auto rr = rref(m);
  std::vector<std::size_t> free;
  std::size_t p = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (p < rr.pivots.size() && rr.pivots[p] == c)
      ++p;
    else
      free.push_back(c);
  }
  return free;
}

Matrix kernel_basis(const Matrix& m) { return null_space(m).basis; }

NullSpace null_space(const Matrix& m) {
  auto rr = rref(m);
  std::vector<std::size_t> free;
  std::size_t p = 0;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (p < rr.pivots.size() && rr.pivots[p] == c)
      ++p;
    else
      free.push_back(c);
  }
  Matrix k(m.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) k(rr.pivots[i], j) = -rr.form(i, free[j]);
  }
  return {std::move(k), std::move(free)};
}

Matrix image_basis(const Matrix& m) { return m.select_columns(rref(m).pivots); }

Matrix left_kernel_basis(const Matrix& m) { return kernel_basis(m.transpose()).transpose(); }

std::optional<Matrix> solve_right(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows())
    throw std::invalid_argument("solve_right: a has " + std::to_string(a.rows()) + " rows, b has " +
                                std::to_string(b.rows()));
  auto rr = rref(hcat(a, b));
  for (auto p : rr.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) x(rr.pivots[i], j) = rr.form(i, a.cols() + j);
  return x;
}

bool in_column_span(const Matrix& a, const Matrix& v) { return solve_right(a, v).has_value(); }

std::vector<Rational> SpanBuilder::reduce(std::vector<Rational> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("SpanBuilder: vector length mismatch");
  Rational f;
  for (const auto& [p, row] : rows_) {
    if (sgn(v[p]) == 0) continue;
    f = v[p];
    for (std::size_t c = p; c < ambient_; ++c)
      if (sgn(row[c]) != 0) v[c] -= f * row[c];
  }
  return v;
}

bool SpanBuilder::add(const std::vector<Rational>& v) {
  auto r = reduce(v);
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (sgn(r[c]) == 0) continue;
    Rational inv = 1 / r[c];
    for (std::size_t k = c; k < ambient_; ++k)
      if (sgn(r[k]) != 0) r[k] *= inv;
    rows_.emplace(c, std::move(r));
    return true;
  }
  return false;
}

bool SpanBuilder::contains(const std::vector<Rational>& v) const {
  auto r = reduce(v);
  for (const auto& x : r)
    if (sgn(x) != 0) return false;
  return true;
}

Matrix SpanBuilder::basis() const {
  Matrix b(ambient_, rows_.size());
  std::size_t j = 0;
  for (const auto& [p, row] : rows_) {
    for (std::size_t i = 0; i < ambient_; ++i) b(i, j) = row[i];
    ++j;
  }
  return b;
}

}  // namespace fdrep
