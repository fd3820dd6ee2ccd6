#include "qlab/maxspec.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qlab {

int Algebra::dim() const {
  int d = 0;
  for (int n : blocks) d += n * n;
  return d;
}

int Algebra::block_offset(int k) const {
  int ofs = 0;
  for (int i = 0; i < k; ++i) ofs += blocks[i] * blocks[i];
  return ofs;
}

std::string Algebra::str() const {
  std::string s = "blocks=[";
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(blocks[i]);
  }
  return s + "]";
}

Algebra parse_algebra(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.rfind("blocks=", 0) == 0) s = s.substr(7);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("parse_algebra: expected blocks=[n1,n2,...] in '" + text + "'");
  Algebra a;
  std::stringstream body(s.substr(1, s.size() - 2));
  std::string tok;
  while (std::getline(body, tok, ',')) {
    size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_algebra: bad block size '" + tok + "'");
    }
    if (used != tok.size() || n < 1)
      throw std::invalid_argument("parse_algebra: bad block size '" + tok + "'");
    a.blocks.push_back(n);
  }
  return a;
}

AlgElement AlgElement::zero(const Algebra& a) {
  AlgElement x;
  for (int n : a.blocks) x.mats.emplace_back(n, n);
  return x;
}

AlgElement AlgElement::identity(const Algebra& a) {
  AlgElement x;
  for (int n : a.blocks) x.mats.push_back(ExactMatrix::identity(n));
  return x;
}

AlgElement AlgElement::basis(const Algebra& a, int idx) {
  if (idx < 0 || idx >= a.dim()) throw std::out_of_range("AlgElement::basis: index");
  AlgElement x = zero(a);
  for (size_t k = 0; k < a.blocks.size(); ++k) {
    int n = a.blocks[k], sq = n * n;
    if (idx < sq) {
      x.mats[k].at(idx / n, idx % n) = GaussRational(1);
      break;
    }
    idx -= sq;
  }
  return x;
}

Algebra AlgElement::algebra() const {
  Algebra a;
  for (const auto& m : mats) a.blocks.push_back(m.rows);
  return a;
}

bool AlgElement::is_zero() const {
  for (const auto& m : mats)
    for (const auto& x : m.data)
      if (!x.is_zero()) return false;
  return true;
}

AlgElement AlgElement::adjoint() const {
  AlgElement x;
  for (const auto& m : mats) x.mats.push_back(conj_transpose(m));
  return x;
}

std::string AlgElement::str() const {
  std::string s;
  for (size_t k = 0; k < mats.size(); ++k) {
    if (k) s += " (+) ";
    s += mats[k].str();
  }
  return s;
}

namespace {

void check_same_shape(const AlgElement& a, const AlgElement& b, const char* op) {
  if (a.mats.size() != b.mats.size())
    throw std::invalid_argument(std::string(op) + ": shape-mismatch");
  for (size_t k = 0; k < a.mats.size(); ++k)
    if (a.mats[k].rows != b.mats[k].rows)
      throw std::invalid_argument(std::string(op) + ": shape-mismatch");
}

}  // namespace

AlgElement operator+(const AlgElement& a, const AlgElement& b) {
  check_same_shape(a, b, "AlgElement+");
  AlgElement x = a;
  for (size_t k = 0; k < x.mats.size(); ++k)
    for (size_t i = 0; i < x.mats[k].data.size(); ++i) x.mats[k].data[i] += b.mats[k].data[i];
  return x;
}

AlgElement operator-(const AlgElement& a, const AlgElement& b) {
  check_same_shape(a, b, "AlgElement-");
  AlgElement x = a;
  for (size_t k = 0; k < x.mats.size(); ++k)
    for (size_t i = 0; i < x.mats[k].data.size(); ++i) x.mats[k].data[i] -= b.mats[k].data[i];
  return x;
}

AlgElement operator*(const AlgElement& a, const AlgElement& b) {
  check_same_shape(a, b, "AlgElement*");
  AlgElement x;
  for (size_t k = 0; k < a.mats.size(); ++k) x.mats.push_back(matmul(a.mats[k], b.mats[k]));
  return x;
}

AlgElement operator*(const GaussRational& c, const AlgElement& a) {
  AlgElement x = a;
  for (auto& m : x.mats)
    for (auto& e : m.data) e *= c;
  return x;
}

std::vector<GaussRational> flatten(const AlgElement& a) {
  std::vector<GaussRational> row;
  for (const auto& m : a.mats) row.insert(row.end(), m.data.begin(), m.data.end());
  return row;
}

AlgElement unflatten(const Algebra& a, const std::vector<GaussRational>& row) {
  if (static_cast<int>(row.size()) != a.dim())
    throw std::invalid_argument("unflatten: shape-mismatch");
  AlgElement x = AlgElement::zero(a);
  size_t pos = 0;
  for (auto& m : x.mats) {
    std::copy(row.begin() + pos, row.begin() + pos + m.data.size(), m.data.begin());
    pos += m.data.size();
  }
  return x;
}

std::string Subspace::str() const {
  if (rank() == 0) return "0";
  std::string s = "span{";
  for (int r = 0; r < basis.rows; ++r) {
    if (r) s += "; ";
    s += unflatten(algebra, basis.row(r)).str();
  }
  return s + "}";
}

Subspace span(const Algebra& a, const std::vector<AlgElement>& spanners) {
  ExactMatrix rows(static_cast<int>(spanners.size()), a.dim());
  for (size_t i = 0; i < spanners.size(); ++i) {
    if (spanners[i].algebra() != a) throw std::invalid_argument("span: shape-mismatch");
    std::vector<GaussRational> flat = flatten(spanners[i]);
    std::copy(flat.begin(), flat.end(), rows.data.begin() + i * flat.size());
  }
  return {a, row_space_basis(rows)};
}

Subspace msbottom(const Algebra& a) { return {a, ExactMatrix(0, a.dim())}; }

Subspace mstop(const Algebra& a) { return {a, ExactMatrix::identity(a.dim())}; }

Subspace msunit(const Algebra& a) { return span(a, {AlgElement::identity(a)}); }

namespace {

void check_same_algebra(const Subspace& m, const Subspace& n, const char* op) {
  if (m.algebra != n.algebra) throw std::invalid_argument(std::string(op) + ": algebra-mismatch");
}

}  // namespace

bool msleq(const Subspace& m, const Subspace& n) {
  check_same_algebra(m, n, "msleq");
  return row_space_leq(m.basis, n.basis);
}

Subspace msjoin(const Subspace& m, const Subspace& n) {
  check_same_algebra(m, n, "msjoin");
  return {m.algebra, row_space_basis(stack(m.basis, n.basis))};
}

Subspace msmeet(const Subspace& m, const Subspace& n) {
  check_same_algebra(m, n, "msmeet");
  return {m.algebra, intersect_row_spaces(m.basis, n.basis)};
}

Subspace msproduct(const Subspace& m, const Subspace& n) {
  check_same_algebra(m, n, "msproduct");
  ExactMatrix rows(m.rank() * n.rank(), m.algebra.dim());
  int r = 0;
  for (int i = 0; i < m.rank(); ++i) {
    AlgElement mi = unflatten(m.algebra, m.basis.row(i));
    for (int j = 0; j < n.rank(); ++j, ++r) {
      std::vector<GaussRational> flat = flatten(mi * unflatten(n.algebra, n.basis.row(j)));
      std::copy(flat.begin(), flat.end(), rows.data.begin() + static_cast<size_t>(r) * flat.size());
    }
  }
  return {m.algebra, row_space_basis(rows)};
}

Subspace msstar(const Subspace& m) {
  ExactMatrix rows(m.rank(), m.algebra.dim());
  for (int i = 0; i < m.rank(); ++i) {
    std::vector<GaussRational> flat = flatten(unflatten(m.algebra, m.basis.row(i)).adjoint());
    std::copy(flat.begin(), flat.end(), rows.data.begin() + static_cast<size_t>(i) * flat.size());
  }
  return {m.algebra, row_space_basis(rows)};
}

bool is_right_ideal(const Subspace& m) { return msleq(msproduct(m, mstop(m.algebra)), m); }

Subspace two_sided_closure(const Subspace& m) {
  Subspace top = mstop(m.algebra);
  return msproduct(top, msproduct(m, top));
}

bool gelfand_identity(const Subspace& m) {
  if (!is_right_ideal(m)) throw std::invalid_argument("gelfand_identity: not-right-ideal");
  return msproduct(msproduct(m, msstar(m)), m) == m;
}

std::optional<std::string> star_hom_violation(const StarHom& f) {
  int d = f.source.dim();
  if (static_cast<int>(f.images.size()) != d) return "shape: image count != source dim";
  for (const auto& img : f.images)
    if (img.algebra() != f.target) return "shape: image outside target";
  if (apply_hom(f, AlgElement::identity(f.source)) != AlgElement::identity(f.target))
    return "unital: f(1) != 1";
  std::vector<AlgElement> base;
  for (int i = 0; i < d; ++i) base.push_back(AlgElement::basis(f.source, i));
  for (int i = 0; i < d; ++i) {
    if (apply_hom(f, base[i].adjoint()) != f.images[i].adjoint())
      return "involutive: basis " + std::to_string(i);
    for (int j = 0; j < d; ++j)
      if (apply_hom(f, base[i] * base[j]) != f.images[i] * f.images[j])
        return "multiplicative: basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return std::nullopt;
}

AlgElement apply_hom(const StarHom& f, const AlgElement& x) {
  if (x.algebra() != f.source) throw std::invalid_argument("apply_hom: algebra-mismatch");
  if (static_cast<int>(f.images.size()) != f.source.dim())
    throw std::invalid_argument("apply_hom: shape-mismatch");
  AlgElement out = AlgElement::zero(f.target);
  std::vector<GaussRational> flat = flatten(x);
  for (size_t i = 0; i < flat.size(); ++i)
    if (!flat[i].is_zero()) out = out + flat[i] * f.images[i];
  return out;
}

StarHom identity_hom(const Algebra& a) {
  StarHom f{a, a, {}};
  for (int i = 0; i < a.dim(); ++i) f.images.push_back(AlgElement::basis(a, i));
  return f;
}

StarHom compose(const StarHom& g, const StarHom& f) {
  if (f.target != g.source) throw std::invalid_argument("compose: algebra-mismatch");
  StarHom h{f.source, g.target, {}};
  for (const auto& img : f.images) h.images.push_back(apply_hom(g, img));
  return h;
}

std::vector<StarHom> enumerate_diagonal_homs(int m, int n) {
  if (m < 1 || n < 0) throw std::invalid_argument("enumerate_diagonal_homs: bad sizes");
  Algebra src{std::vector<int>(m, 1)}, tgt{std::vector<int>(n, 1)};
  std::vector<StarHom> out;
  std::vector<int> phi(n, 0);  // phi[j] = source coordinate feeding target coordinate j
  for (;;) {
    StarHom f{src, tgt, std::vector<AlgElement>(m, AlgElement::zero(tgt))};
    for (int j = 0; j < n; ++j) f.images[phi[j]].mats[j].at(0, 0) = GaussRational(1);
    out.push_back(std::move(f));
    int j = n - 1;
    while (j >= 0 && phi[j] == m - 1) phi[j--] = 0;
    if (j < 0) break;
    ++phi[j];
  }
  return out;
}

StarHom projection_pair_hom(const ExactMatrix& p) {
  if (p.rows != 2 || p.cols != 2) throw std::invalid_argument("projection_pair_hom: need 2x2");
  Algebra c2{{1, 1}}, m2{{2}};
  ExactMatrix q = ExactMatrix::identity(2);
  for (size_t i = 0; i < q.data.size(); ++i) q.data[i] -= p.data[i];
  return {c2, m2, {AlgElement{{p}}, AlgElement{{q}}}};
}

Subspace max_functor(const StarHom& f, const Subspace& m) {
  if (auto v = star_hom_violation(f)) throw std::invalid_argument("max_functor: invalid-hom: " + *v);
  if (m.algebra != f.source) throw std::invalid_argument("max_functor: algebra-mismatch");
  std::vector<AlgElement> images;
  for (int r = 0; r < m.rank(); ++r)
    images.push_back(apply_hom(f, unflatten(m.algebra, m.basis.row(r))));
  return span(f.target, images);
}

Subspace rs_functor(const StarHom& f, const Subspace& j) {
  if (!is_right_ideal(j)) throw std::invalid_argument("rs_functor: not-right-ideal");
  return msproduct(max_functor(f, j), mstop(f.target));
}

ExactMatrix hilbert_point_action(const Subspace& v, int k, const ExactMatrix& w) {
  if (k < 0 || k >= static_cast<int>(v.algebra.blocks.size()))
    throw std::invalid_argument("hilbert_point_action: bad-block-index");
  int n = v.algebra.blocks[k];
  if (w.cols != n) throw std::invalid_argument("hilbert_point_action: shape-mismatch");
  ExactMatrix wb = row_space_basis(w);
  ExactMatrix rows(0, n);
  for (int r = 0; r < v.rank(); ++r) {
    AlgElement a = unflatten(v.algebra, v.basis.row(r));
    rows = stack(rows, matmul(wb, a.mats[k]));
  }
  return row_space_basis(rows);
}

uint32_t diagonal_support(const Subspace& m) {
  for (int b : m.algebra.blocks)
    if (b != 1) throw std::invalid_argument("diagonal_support: not-diagonal");
  int n = static_cast<int>(m.algebra.blocks.size());
  if (n > 31) throw std::length_error("diagonal_support: cap-exceeded");
  uint32_t mask = 0;
  for (int r = 0; r < m.basis.rows; ++r)
    for (int c = 0; c < n; ++c)
      if (!m.basis.at(r, c).is_zero()) mask |= 1u << c;
  return mask;
}

std::vector<Subspace> primes_diagonal(int n) {
  Algebra a{std::vector<int>(n, 1)};
  std::vector<Subspace> out;
  for (int x0 = 0; x0 < n; ++x0) {
    ExactMatrix basis(n - 1, n);
    int r = 0;
    for (int j = 0; j < n; ++j)
      if (j != x0) basis.at(r++, j) = GaussRational(1);
    out.push_back({a, std::move(basis)});
  }
  return out;
}

int DiagonalSpatialization::index_of(const Subspace& m) const {
  if (m.algebra.blocks != std::vector<int>(n, 1))
    throw std::invalid_argument("DiagonalSpatialization: algebra-mismatch");
  return frame.index_of_mask(diagonal_support(m));
}

DiagonalSpatialization spatialization_diagonal(int n) {
  if (n < 0 || n > 8)
    throw std::length_error("spatialization_diagonal: cap-exceeded: supported up to 8 coordinates");
  return {n, frame_of_downsets(antichain_poset(n))};
}

PrimeRefutation refute_prime(const Subspace& p, const Subspace& a, const Subspace& b) {
  check_same_algebra(p, a, "refute_prime");
  check_same_algebra(p, b, "refute_prime");
  PrimeRefutation out;
  out.product_below = msleq(msproduct(msproduct(a, mstop(p.algebra)), b), p);
  out.a_below = msleq(a, p);
  out.b_below = msleq(b, p);
  return out;
}

CommutativeReflection commutative_reflection(const Algebra& a) {
  int c = static_cast<int>(std::count(a.blocks.begin(), a.blocks.end(), 1));
  if (c > 8)
    throw std::length_error("commutative_reflection: cap-exceeded: supported up to 8 commutative blocks");
  return {Algebra{std::vector<int>(c, 1)}, frame_of_downsets(antichain_poset(c))};
}

ObstructionReport coproduct_obstruction_check() {
  Algebra c4{{1, 1, 1, 1}};
  ObstructionReport rep;
  rep.witness.fill({-1, -1, -1, -1});
  rep.exact_matches_symbolic = true;
  rep.families_closed = true;

  auto tuple_elem = [&](int a, int b, int c, int d) {
    AlgElement x = AlgElement::zero(c4);
    x.mats[0].at(0, 0) = GaussRational(a);
    x.mats[1].at(0, 0) = GaussRational(b);
    x.mats[2].at(0, 0) = GaussRational(c);
    x.mats[3].at(0, 0) = GaussRational(d);
    return x;
  };
  auto gamma1 = [&](int z, int w) { return tuple_elem(z, z, w, w); };
  auto gamma2 = [&](int z, int w) { return tuple_elem(z, w, z, w); };

  for (int z = 0; z < 2; ++z)
    for (int w = 0; w < 2; ++w)
      for (int z2 = 0; z2 < 2; ++z2)
        for (int w2 = 0; w2 < 2; ++w2) {
          Subspace prod = msproduct(span(c4, {gamma1(z, w)}), span(c4, {gamma2(z2, w2)}));
          uint32_t mask = ((z & z2) << 0) | ((z & w2) << 1) | ((w & z2) << 2) | ((w & w2) << 3);
          if (diagonal_support(prod) != mask || prod.rank() != (mask ? 1 : 0))
            rep.exact_matches_symbolic = false;
          if (!rep.reachable[mask]) {
            rep.reachable[mask] = true;
            rep.witness[mask] = {z, w, z2, w2};
          }
          // each generator family is closed under products (C^4 is commutative,
          // so every product of generators reduces to one gamma1 times one gamma2)
          uint32_t m11 = diagonal_support(msproduct(span(c4, {gamma1(z, w)}), span(c4, {gamma1(z2, w2)})));
          uint32_t m22 = diagonal_support(msproduct(span(c4, {gamma2(z, w)}), span(c4, {gamma2(z2, w2)})));
          bool f1 = ((m11 >> 0) & 1) == ((m11 >> 1) & 1) && ((m11 >> 2) & 1) == ((m11 >> 3) & 1);
          bool f2 = ((m22 >> 0) & 1) == ((m22 >> 2) & 1) && ((m22 >> 1) & 1) == ((m22 >> 3) & 1);
          if (!f1 || !f2) rep.families_closed = false;
        }

  rep.one_zero_forces_two = true;
  for (int mask = 0; mask < 16; ++mask)
    if (rep.reachable[mask] && std::popcount(static_cast<unsigned>(mask)) == 3)
      rep.one_zero_forces_two = false;

  // distinct atoms are never joins of one another: their join has rank 2
  std::vector<AlgElement> atoms = {tuple_elem(1, 0, 1, 1), tuple_elem(1, 1, 1, 1),
                                   tuple_elem(1, 0, 0, 0), tuple_elem(0, 1, 0, 1),
                                   tuple_elem(1, 1, 0, 0), tuple_elem(1, 0, 0, 1)};
  rep.atoms_not_joins = true;
  for (size_t i = 0; i < atoms.size(); ++i)
    for (size_t j = i + 1; j < atoms.size(); ++j)
      if (msjoin(span(c4, {atoms[i]}), span(c4, {atoms[j]})).rank() != 2)
        rep.atoms_not_joins = false;

  rep.separating_target_unreachable = !rep.reachable[0b1101];  // (1,0,1,1)
  return rep;
}

GaussRational SubspaceSampler::coefficient() {
  auto pick = [&](int n) { return static_cast<int>(rng() % n); };
  Rational re(pick(5) - 2, pick(2) + 1);
  Rational im(pick(5) - 2, pick(2) + 1);
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

AlgElement SubspaceSampler::element(const Algebra& a) {
  AlgElement x = AlgElement::zero(a);
  for (auto& m : x.mats)
    for (auto& e : m.data)
      if (rng() % 3) e = coefficient();
  return x;
}

Subspace SubspaceSampler::subspace(const Algebra& a, int max_spanners) {
  int k = static_cast<int>(rng() % (max_spanners + 1));
  std::vector<AlgElement> spanners;
  for (int i = 0; i < k; ++i) spanners.push_back(element(a));
  return span(a, spanners);
}

AlgElement SubspaceSampler::projection(const Algebra& a) {
  AlgElement p = AlgElement::zero(a);
  for (size_t k = 0; k < a.blocks.size(); ++k) {
    int n = a.blocks[k];
    int want = static_cast<int>(rng() % (n + 1));
    ExactMatrix b(0, n);
    for (int tries = 0; b.rows < want && tries < 8 * n; ++tries) {
      ExactMatrix cand(1, n);
      for (auto& e : cand.data)
        if (rng() % 3) e = coefficient();
      ExactMatrix next = row_space_basis(stack(b, cand));
      if (next.rows > b.rows) b = std::move(next);
    }
    if (b.rows == 0) continue;  // zero block
    // orthogonal projection b^H (b b^H)^{-1} b; the Gram matrix is invertible
    // because b has full row rank and the form is positive definite
    ExactMatrix bh = conj_transpose(b);
    ExactMatrix gram = matmul(b, bh);
    ExactMatrix aug(b.rows, 2 * b.rows);
    for (int i = 0; i < b.rows; ++i) {
      for (int j = 0; j < b.rows; ++j) aug.at(i, j) = gram.at(i, j);
      aug.at(i, b.rows + i) = GaussRational(1);
    }
    ExactMatrix red = rref(aug).mat;
    ExactMatrix ginv(b.rows, b.rows);
    for (int i = 0; i < b.rows; ++i)
      for (int j = 0; j < b.rows; ++j) ginv.at(i, j) = red.at(i, b.rows + j);
    p.mats[k] = matmul(matmul(bh, ginv), b);
  }
  return p;
}

Subspace SubspaceSampler::right_ideal(const Algebra& a) {
  Subspace base = rng() % 2 ? span(a, {projection(a)}) : subspace(a, 3);
  return msproduct(base, mstop(a));
}

}  // namespace qlab
