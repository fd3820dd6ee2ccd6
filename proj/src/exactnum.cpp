#include "qlab/exactnum.hpp"

#include <cctype>
#include <sstream>

namespace qlab {

namespace {

// rat := ['+'|'-'] digits ['/' digits]; pos advances past the token.
Rational parse_rational(const std::string& s, size_t& pos) {
  size_t start = pos;
  bool neg = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    neg = s[pos] == '-';
    ++pos;
  }
  size_t dstart = pos;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos == dstart)
    throw std::invalid_argument("GaussRational: expected digits at '" + s.substr(start) + "'");
  mpz_class num(s.substr(dstart, pos - dstart));
  mpz_class den(1);
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    size_t estart = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == estart)
      throw std::invalid_argument("GaussRational: expected denominator in '" + s + "'");
    den = mpz_class(s.substr(estart, pos - estart));
    if (den == 0) throw std::invalid_argument("GaussRational: zero denominator in '" + s + "'");
  }
  Rational q(neg ? -num : num, den);
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace

GaussRational GaussRational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("GaussRational: empty literal");

  size_t pos = 0;
  auto parse_part = [&](bool& is_imag) {
    // A part is a rational optionally suffixed 'i'; bare "i"/"+i"/"-i" mean 1i.
    Rational sign(1);
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sign = -1;
      if (pos + 1 < s.size() && s[pos + 1] == 'i') {
        pos += 2;
        is_imag = true;
        return Rational(sign);
      }
    } else if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      is_imag = true;
      return Rational(1);
    }
    Rational q = parse_rational(s, pos);
    is_imag = pos < s.size() && s[pos] == 'i';
    if (is_imag) ++pos;
    return q;
  };

  GaussRational out;
  bool imag = false;
  Rational first = parse_part(imag);
  if (imag)
    out.im = first;
  else
    out.re = first;
  if (pos < s.size()) {
    if (imag)
      throw std::invalid_argument("GaussRational: trailing input after imaginary part: '" + s + "'");
    bool imag2 = false;
    Rational second = parse_part(imag2);
    if (!imag2)
      throw std::invalid_argument("GaussRational: second component must be imaginary: '" + s + "'");
    out.im = second;
  }
  if (pos != s.size())
    throw std::invalid_argument("GaussRational: trailing input in '" + s + "'");
  return out;
}

std::string GaussRational::str() const {
  if (im == 0) return rational_str(re);
  std::string r = rational_str(re);
  std::string i = rational_str(im);
  if (!i.empty() && i[0] != '-') r += '+';
  return r + i + "i";
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = GaussRational(1);
  return m;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < rows; ++r) {
    if (r) os << ',';
    os << '[';
    for (int c = 0; c < cols; ++c) {
      if (c) os << ',';
      os << at(r, c).str();
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

RrefResult rref(const ExactMatrix& m) {
  RrefResult out{m, 0};
  ExactMatrix& a = out.mat;
  int lead = 0;
  for (int col = 0; col < a.cols && lead < a.rows; ++col) {
    int pivot = -1;
    for (int r = lead; r < a.rows; ++r)
      if (!a.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != lead)
      for (int c = 0; c < a.cols; ++c) std::swap(a.at(pivot, c), a.at(lead, c));
    GaussRational inv = a.at(lead, col).inv();
    for (int c = col; c < a.cols; ++c) a.at(lead, c) *= inv;
    for (int r = 0; r < a.rows; ++r) {
      if (r == lead || a.at(r, col).is_zero()) continue;
      GaussRational f = a.at(r, col);
      for (int c = col; c < a.cols; ++c) a.at(r, c) -= f * a.at(lead, c);
    }
    ++lead;
  }
  out.rank = lead;
  return out;
}

ExactMatrix row_space_basis(const ExactMatrix& m) {
  RrefResult r = rref(m);
  ExactMatrix out(r.rank, m.cols);
  std::copy(r.mat.data.begin(), r.mat.data.begin() + static_cast<size_t>(r.rank) * m.cols,
            out.data.begin());
  return out;
}

bool in_row_space(const ExactMatrix& m, const std::vector<GaussRational>& v) {
  if (static_cast<int>(v.size()) != m.cols)
    throw std::invalid_argument("in_row_space: vector length != column count");
  ExactMatrix basis = row_space_basis(m);
  std::vector<GaussRational> w = v;
  for (int r = 0; r < basis.rows; ++r) {
    int lead = -1;
    for (int c = 0; c < basis.cols; ++c)
      if (!basis.at(r, c).is_zero()) {
        lead = c;
        break;
      }
    if (lead < 0) continue;  // unreachable: basis has no zero rows
    if (w[lead].is_zero()) continue;
    GaussRational f = w[lead];  // pivot entries are 1 in RREF
    for (int c = 0; c < basis.cols; ++c) w[c] -= f * basis.at(r, c);
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool row_space_leq(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols != b.cols) throw std::invalid_argument("row_space_leq: column counts differ");
  ExactMatrix bb = row_space_basis(b);
  for (int r = 0; r < a.rows; ++r)
    if (!in_row_space(bb, a.row(r))) return false;
  return true;
}

ExactMatrix stack(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols != b.cols && a.rows != 0 && b.rows != 0)
    throw std::invalid_argument("stack: column counts differ");
  int cols = a.rows ? a.cols : b.cols;
  ExactMatrix out(a.rows + b.rows, cols);
  std::copy(a.data.begin(), a.data.end(), out.data.begin());
  std::copy(b.data.begin(), b.data.end(), out.data.begin() + a.data.size());
  return out;
}

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul: inner dimensions differ");
  ExactMatrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const GaussRational& f = a.at(i, k);
      if (f.is_zero()) continue;
      for (int j = 0; j < b.cols; ++j) out.at(i, j) += f * b.at(k, j);
    }
  return out;
}

ExactMatrix conj_transpose(const ExactMatrix& m) {
  ExactMatrix out(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out.at(j, i) = m.at(i, j).conj();
  return out;
}

ExactMatrix null_space(const ExactMatrix& m) {
  RrefResult r = rref(m);
  // Pivot column of each of the leading rank rows, in order.
  std::vector<int> pivot_col(r.rank);
  std::vector<bool> is_pivot(m.cols, false);
  for (int i = 0; i < r.rank; ++i) {
    int c = 0;
    while (r.mat.at(i, c).is_zero()) ++c;
    pivot_col[i] = c;
    is_pivot[c] = true;
  }
  ExactMatrix out(m.cols - r.rank, m.cols);
  int row = 0;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    out.at(row, f) = GaussRational(1);
    for (int i = 0; i < r.rank; ++i) out.at(row, pivot_col[i]) = -r.mat.at(i, f);
    ++row;
  }
  return row_space_basis(out);
}

ExactMatrix intersect_row_spaces(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols != b.cols) throw std::invalid_argument("intersect: column counts differ");
  int n = a.cols;
  ExactMatrix ab = row_space_basis(a);
  ExactMatrix bb = row_space_basis(b);
  // Zassenhaus: reduce [A|A; B|0]; rows with zero left half carry the
  // intersection in their right half.
  ExactMatrix z(ab.rows + bb.rows, 2 * n);
  for (int r = 0; r < ab.rows; ++r)
    for (int c = 0; c < n; ++c) z.at(r, c) = z.at(r, n + c) = ab.at(r, c);
  for (int r = 0; r < bb.rows; ++r)
    for (int c = 0; c < n; ++c) z.at(ab.rows + r, c) = bb.at(r, c);
  ExactMatrix zr = rref(z).mat;
  ExactMatrix keep(0, n);
  for (int r = 0; r < zr.rows; ++r) {
    bool left_zero = true;
    for (int c = 0; c < n && left_zero; ++c) left_zero = zr.at(r, c).is_zero();
    if (!left_zero) continue;
    ExactMatrix one(1, n);
    for (int c = 0; c < n; ++c) one.at(0, c) = zr.at(r, n + c);
    keep = stack(keep, one);
  }
  return row_space_basis(keep);
}

}  // namespace qlab
