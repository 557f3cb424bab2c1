#include "autorbit/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <stdexcept>

#include "autorbit/errors.hpp"

namespace autorbit {

namespace {

Permutation cycle_perm(std::size_t degree, const std::vector<std::size_t>& cycle) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t j = 0; j < cycle.size(); ++j)
    images[cycle[j]] = static_cast<Point>(cycle[(j + 1) % cycle.size()]);
  return Permutation(std::move(images));
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

FiniteGroup sym(std::size_t n) {
  if (n < 1) throw BadParameter("sym: n must be positive");
  std::vector<Permutation> gens;
  if (n >= 2) gens.push_back(cycle_perm(n, {0, 1}));
  if (n >= 3) {
    std::vector<std::size_t> c(n);
    std::iota(c.begin(), c.end(), std::size_t{0});
    gens.push_back(cycle_perm(n, c));
  }
  return close_group(n, gens, kDefaultClosureLimit, "sym" + std::to_string(n));
}

FiniteGroup alt(std::size_t n) {
  if (n < 1) throw BadParameter("alt: n must be positive");
  std::vector<Permutation> gens;
  for (std::size_t i = 2; i < n; ++i) gens.push_back(cycle_perm(n, {0, 1, i}));
  return close_group(n, gens, kDefaultClosureLimit, "alt" + std::to_string(n));
}

FiniteGroup cyclic(std::size_t n) {
  if (n < 1) throw BadParameter("cyclic: n must be positive");
  std::vector<Permutation> gens;
  if (n >= 2) {
    std::vector<std::size_t> c(n);
    std::iota(c.begin(), c.end(), std::size_t{0});
    gens.push_back(cycle_perm(n, c));
  }
  return close_group(n, gens, kDefaultClosureLimit, "cyclic" + std::to_string(n));
}

FiniteGroup extraspecial_p3_exponent_p(std::uint32_t p) {
  if (p < 3 || p > 7 || !is_prime(p))
    throw BadParameter("extraspecial_p3_exponent_p: p must be an odd prime <= 7");
  std::size_t deg = std::size_t{p} * p;
  std::vector<Point> shear(deg), shift(deg);
  for (std::uint32_t y = 0; y < p; ++y)
    for (std::uint32_t x = 0; x < p; ++x) {
      shear[x + p * y] = static_cast<Point>((x + y) % p + p * y);
      shift[x + p * y] = static_cast<Point>(x + p * ((y + 1) % p));
    }
  return close_group(deg, {Permutation(shear), Permutation(shift)}, kDefaultClosureLimit,
                     "extraspecial(" + std::to_string(p) + ")");
}

// ---------------------------------------------------------------------------
// matrices

Matrix identity_matrix(std::size_t dim) {
  Matrix m{dim, std::vector<FiniteField::Elem>(dim * dim, 0)};
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

Matrix mat_mul(const FiniteField& F, const Matrix& a, const Matrix& b) {
  std::size_t d = a.dim;
  Matrix r{d, std::vector<FiniteField::Elem>(d * d, 0)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      FiniteField::Elem s = 0;
      for (std::size_t k = 0; k < d; ++k) s = F.add(s, F.mul(a.at(i, k), b.at(k, j)));
      r.at(i, j) = s;
    }
  return r;
}

FiniteField::Elem determinant(const FiniteField& F, Matrix m) {
  std::size_t d = m.dim;
  FiniteField::Elem det = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t pivot = c;
    while (pivot < d && m.at(pivot, c) == 0) ++pivot;
    if (pivot == d) return 0;
    if (pivot != c) {
      for (std::size_t j = 0; j < d; ++j) std::swap(m.at(pivot, j), m.at(c, j));
      det = F.neg(det);
    }
    det = F.mul(det, m.at(c, c));
    FiniteField::Elem inv = F.inv(m.at(c, c));
    for (std::size_t r = c + 1; r < d; ++r) {
      FiniteField::Elem factor = F.mul(m.at(r, c), inv);
      if (factor == 0) continue;
      for (std::size_t j = c; j < d; ++j) m.at(r, j) = F.sub(m.at(r, j), F.mul(factor, m.at(c, j)));
    }
  }
  return det;
}

Matrix mat_inverse(const FiniteField& F, const Matrix& m) {
  std::size_t d = m.dim;
  Matrix a = m, r = identity_matrix(d);
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t pivot = c;
    while (pivot < d && a.at(pivot, c) == 0) ++pivot;
    if (pivot == d) throw BadParameter("matrix is singular");
    for (std::size_t j = 0; j < d; ++j) {
      std::swap(a.at(pivot, j), a.at(c, j));
      std::swap(r.at(pivot, j), r.at(c, j));
    }
    FiniteField::Elem inv = F.inv(a.at(c, c));
    for (std::size_t j = 0; j < d; ++j) {
      a.at(c, j) = F.mul(a.at(c, j), inv);
      r.at(c, j) = F.mul(r.at(c, j), inv);
    }
    for (std::size_t row = 0; row < d; ++row) {
      if (row == c || a.at(row, c) == 0) continue;
      FiniteField::Elem factor = a.at(row, c);
      for (std::size_t j = 0; j < d; ++j) {
        a.at(row, j) = F.sub(a.at(row, j), F.mul(factor, a.at(c, j)));
        r.at(row, j) = F.sub(r.at(row, j), F.mul(factor, r.at(c, j)));
      }
    }
  }
  return r;
}

Matrix transpose(const Matrix& m) {
  Matrix t = m;
  for (std::size_t i = 0; i < m.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j) t.at(i, j) = m.at(j, i);
  return t;
}

Matrix entrywise_power(const FiniteField& F, const Matrix& m, std::uint64_t e) {
  Matrix r = m;
  for (auto& x : r.entries) x = F.pow(x, e);
  return r;
}

bool preserves_hermitian_form(const FiniteField& F, std::uint64_t q, const Matrix& a) {
  return mat_mul(F, a, transpose(entrywise_power(F, a, q))) == identity_matrix(a.dim);
}

// ---------------------------------------------------------------------------
// projective space

ProjectiveSpace::ProjectiveSpace(const FiniteField& field, std::size_t dim)
    : field_(field), dim_(dim) {
  std::uint64_t q = field.size();
  std::uint64_t total = ipow(q, dim);
  if (total > (1u << 24)) throw TooLarge("projective space too large");
  lookup_.assign(total, 0xffffffffu);
  // vectors in lexicographic order: first coordinate most significant
  std::vector<FiniteField::Elem> v(dim);
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = dim; i-- > 0;) {
      v[i] = static_cast<FiniteField::Elem>(c % q);
      c /= q;
    }
    std::size_t last = dim;
    while (last-- > 0 && v[last] == 0) {
    }
    if (v[last] != 1) continue;
    lookup_[code] = static_cast<std::uint32_t>(points_.size());
    points_.push_back(v);
  }
  if (points_.size() > kMaxDegree) throw TooLarge("too many projective points");
}

std::size_t ProjectiveSpace::index_of(std::vector<FiniteField::Elem> v) const {
  std::size_t last = dim_;
  while (last-- > 0 && v[last] == 0) {
  }
  if (last >= dim_) throw BadParameter("zero vector has no projective point");
  FiniteField::Elem s = field_.inv(v[last]);
  std::uint64_t code = 0;
  for (auto& x : v) {
    x = field_.mul(x, s);
    code = code * field_.size() + x;
  }
  return lookup_[code];
}

Permutation ProjectiveSpace::action(const Matrix& a) const {
  std::vector<Point> images(points_.size());
  std::vector<FiniteField::Elem> y(dim_);
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const auto& x = points_[i];
    for (std::size_t r = 0; r < dim_; ++r) {
      FiniteField::Elem s = 0;
      for (std::size_t c = 0; c < dim_; ++c) s = field_.add(s, field_.mul(a.at(r, c), x[c]));
      y[r] = s;
    }
    images[i] = static_cast<Point>(index_of(y));
  }
  return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------
// classical groups

std::uint64_t projective_group_order(ClassicalKind kind, std::size_t d, std::uint64_t q) {
  bool unitary = kind == ClassicalKind::GU || kind == ClassicalKind::SU;
  std::uint64_t order = ipow(q, d * (d - 1) / 2);
  for (std::size_t i = 2; i <= d; ++i) {
    std::uint64_t qi = ipow(q, i);
    order *= unitary ? (i % 2 ? qi + 1 : qi - 1) : qi - 1;
  }
  // the i = 1 factor (q - 1 or q + 1) cancels against the scalars
  std::uint64_t scalars_split = unitary ? q + 1 : q - 1;
  if (kind == ClassicalKind::SL || kind == ClassicalKind::SU)
    order /= std::gcd(static_cast<std::uint64_t>(d), scalars_split);
  return order;
}

ProjectiveGroup projective_group_with_matrices(ClassicalKind kind, std::size_t d, std::uint64_t q,
                                               std::size_t limit) {
  if (d < 2) throw BadParameter("projective_group: dimension must be at least 2");
  auto [p, f] = prime_power(q);
  bool unitary = kind == ClassicalKind::GU || kind == ClassicalKind::SU;
  bool special = kind == ClassicalKind::SL || kind == ClassicalKind::SU;
  FiniteField F = make_field(p, unitary ? 2 * f : f);
  std::uint64_t target = projective_group_order(kind, d, q);
  if (target > limit)
    throw TooLarge("projective group of order " + std::to_string(target) + " exceeds limit " +
                   std::to_string(limit));
  ProjectiveSpace space(F, d);

  std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(kind) * 1000 + d * 100 + q);
  std::uniform_int_distribution<FiniteField::Elem> entry(0, F.size() - 1);
  auto conj = [&](FiniteField::Elem x) { return F.pow(x, q); };

  auto random_matrix = [&]() -> Matrix {
    for (;;) {
      Matrix m{d, std::vector<FiniteField::Elem>(d * d)};
      if (!unitary) {
        for (auto& x : m.entries) x = entry(rng);
        FiniteField::Elem det = determinant(F, m);
        if (det == 0) continue;
        if (special) {
          FiniteField::Elem s = F.inv(det);
          for (std::size_t j = 0; j < d; ++j) m.at(0, j) = F.mul(m.at(0, j), s);
        }
        return m;
      }
      // rows orthonormal for the form sum x_i conj(y_i)
      for (std::size_t r = 0; r < d; ++r) {
        for (;;) {
          for (std::size_t j = 0; j < d; ++j) m.at(r, j) = entry(rng);
          FiniteField::Elem norm = 0;
          for (std::size_t j = 0; j < d; ++j) norm = F.add(norm, F.mul(m.at(r, j), conj(m.at(r, j))));
          if (norm != 1) continue;
          bool orthogonal = true;
          for (std::size_t s = 0; s < r && orthogonal; ++s) {
            FiniteField::Elem ip = 0;
            for (std::size_t j = 0; j < d; ++j) ip = F.add(ip, F.mul(m.at(r, j), conj(m.at(s, j))));
            orthogonal = ip == 0;
          }
          if (orthogonal) break;
        }
      }
      if (special && determinant(F, m) != 1) continue;
      return m;
    }
  };

  static const char* const kNames[] = {"pgl", "psl", "pgu", "psu"};
  std::string name = std::string(kNames[static_cast<int>(kind)]) + "(" + std::to_string(d) + "," +
                     std::to_string(q) + ")";
  std::vector<Matrix> matrices;
  std::vector<Permutation> gens;
  for (int attempt = 0; attempt < 40; ++attempt) {
    Matrix m = random_matrix();
    Permutation g = space.action(m);
    if (g.is_identity()) continue;
    matrices.push_back(std::move(m));
    gens.push_back(std::move(g));
    if (gens.size() < 2) continue;
    FiniteGroup grp = close_group(space.size(), gens, limit, name);
    if (grp.order() == target) return ProjectiveGroup{std::move(grp), F, std::move(matrices)};
    if (grp.order() > target) throw std::logic_error("projective group larger than its order formula");
  }
  throw std::logic_error("random generation failed to reach the full projective group " + name);
}

FiniteGroup projective_group(ClassicalKind kind, std::size_t d, std::uint64_t q, std::size_t limit) {
  return projective_group_with_matrices(kind, d, q, limit).group;
}

FiniteGroup projective_semilinear_group(ClassicalKind kind, std::size_t d, std::uint64_t q,
                                        std::size_t limit) {
  ProjectiveGroup pg = projective_group_with_matrices(kind, d, q, limit);
  const FiniteField& F = pg.field;
  ProjectiveSpace space(F, d);
  std::vector<Point> frob(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    std::vector<FiniteField::Elem> v = space.point(i);
    for (auto& x : v) x = F.frobenius(x);
    frob[i] = static_cast<Point>(space.index_of(v));
  }
  std::vector<Permutation> gens = pg.group.generators();
  gens.emplace_back(std::move(frob));
  bool unitary = kind == ClassicalKind::GU || kind == ClassicalKind::SU;
  std::string name = std::string(unitary ? "psigmau(" : "psigmal(") + std::to_string(d) + "," +
                     std::to_string(q) + ")";
  return close_group(space.size(), gens, limit, name);
}

FiniteGroup extended_aut_psl(std::size_t d, std::uint64_t q, std::size_t limit, std::string name) {
  if (d < 3) throw BadParameter("extended_aut_psl: dimension must be at least 3");
  ProjectiveGroup pgl = projective_group_with_matrices(ClassicalKind::GL, d, q, limit);
  const FiniteField& F = pgl.field;
  ProjectiveSpace space(F, d);
  std::size_t n = space.size();

  auto point_line_action = [&](const Matrix& a) {
    Permutation on_points = space.action(a);
    Permutation on_lines = space.action(transpose(mat_inverse(F, a)));
    std::vector<Point> images(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      images[i] = on_points(i);
      images[n + i] = static_cast<Point>(n + on_lines(i));
    }
    return Permutation(std::move(images));
  };

  std::vector<Permutation> gens;
  for (const auto& m : pgl.matrices) gens.push_back(point_line_action(m));

  std::vector<Point> frob(2 * n), duality(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<FiniteField::Elem> v = space.point(i);
    for (auto& x : v) x = F.frobenius(x);
    std::size_t j = space.index_of(v);
    frob[i] = static_cast<Point>(j);
    frob[n + i] = static_cast<Point>(n + j);
    duality[i] = static_cast<Point>(n + i);
    duality[n + i] = static_cast<Point>(i);
  }
  gens.emplace_back(std::move(frob));
  gens.emplace_back(std::move(duality));
  if (name.empty()) name = "aut(psl(" + std::to_string(d) + "," + std::to_string(q) + "))";
  return close_group(2 * n, gens, limit, std::move(name));
}

FiniteGroup extended_aut_psl34() { return extended_aut_psl(3, 4, kDefaultClosureLimit, "aut_psl34"); }

// ---------------------------------------------------------------------------
// named groups

std::string canonical_group_name(std::string_view name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  // "alt(5)" -> "alt5" for the one-parameter families
  for (const char* fam : {"sym", "alt", "cyclic"}) {
    std::string f = fam;
    if (s.rfind(f + "(", 0) == 0 && s.back() == ')')
      s = f + s.substr(f.size() + 1, s.size() - f.size() - 2);
  }
  if (s == "extraspecial27") s = "extraspecial(3)";
  if (s == "aut(psl(3,4))") s = "aut_psl34";
  return s;
}

namespace {

struct ParsedName {
  std::string family;
  std::vector<std::uint64_t> args;
};

ParsedName parse_name(const std::string& s) {
  ParsedName out;
  std::size_t i = 0;
  while (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
  out.family = s.substr(0, i);
  std::string rest = s.substr(i);
  if (rest.empty()) return out;
  bool paren = rest.front() == '(';
  if (paren) {
    if (rest.back() != ')') throw BadParameter("malformed group name: " + s);
    rest = rest.substr(1, rest.size() - 2);
  }
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    std::size_t comma = rest.find(',', pos);
    std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw BadParameter("malformed group name: " + s);
    out.args.push_back(std::stoull(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

FiniteGroup named_group(std::string_view raw, std::size_t limit) {
  std::string name = canonical_group_name(raw);
  auto check_n = [&](std::uint64_t order) {
    if (order > limit) throw TooLarge(name + " has order " + std::to_string(order));
  };
  if (name == "aut_psl34") {
    check_n(241920);
    return extended_aut_psl34();
  }
  ParsedName pn = parse_name(name);
  auto need = [&](std::size_t k) {
    if (pn.args.size() != k) throw BadParameter("wrong number of parameters in group name: " + name);
  };
  if (pn.family == "sym" || pn.family == "alt" || pn.family == "cyclic") {
    need(1);
    std::uint64_t n = pn.args[0];
    if (n < 1 || n > 20) throw BadParameter("degree out of range in " + name);
    if (pn.family != "cyclic") check_n(factorial(n) / (pn.family == "alt" && n > 1 ? 2 : 1));
    if (pn.family == "sym") return sym(n);
    if (pn.family == "alt") return alt(n);
    return cyclic(n);
  }
  if (pn.family == "extraspecial") {
    need(1);
    return extraspecial_p3_exponent_p(static_cast<std::uint32_t>(pn.args[0]));
  }
  static const std::pair<const char*, ClassicalKind> kinds[] = {
      {"pgl", ClassicalKind::GL}, {"psl", ClassicalKind::SL},
      {"pgu", ClassicalKind::GU}, {"psu", ClassicalKind::SU}};
  for (auto [fam, kind] : kinds) {
    if (pn.family == fam) {
      need(2);
      return projective_group(kind, pn.args[0], pn.args[1], limit);
    }
  }
  if (pn.family == "psigmal" || pn.family == "psigmau") {
    need(2);
    auto kind = pn.family == "psigmal" ? ClassicalKind::SL : ClassicalKind::SU;
    return projective_semilinear_group(kind, pn.args[0], pn.args[1], limit);
  }
  throw BadParameter("unknown group name: " + std::string(raw));
}

std::vector<CatalogEntry> catalog_list() {
  std::vector<CatalogEntry> out;
  for (std::size_t n : {3, 4, 5, 6, 7}) out.push_back({"sym" + std::to_string(n), factorial(n)});
  for (std::size_t n : {4, 5, 6, 7}) out.push_back({"alt" + std::to_string(n), factorial(n) / 2});
  for (std::size_t n : {2, 5, 12}) out.push_back({"cyclic" + std::to_string(n), n});
  for (std::uint64_t p : {3, 5, 7}) out.push_back({"extraspecial(" + std::to_string(p) + ")", p * p * p});
  struct Spec {
    const char* fam;
    ClassicalKind kind;
    std::size_t d;
    std::uint64_t q;
  };
  static const Spec specs[] = {
      {"psl", ClassicalKind::SL, 2, 7},  {"psl", ClassicalKind::SL, 2, 8},
      {"psl", ClassicalKind::SL, 3, 2},  {"psl", ClassicalKind::SL, 3, 4},
      {"pgl", ClassicalKind::GL, 2, 3},  {"pgl", ClassicalKind::GL, 2, 7},
      {"pgl", ClassicalKind::GL, 3, 2},  {"pgl", ClassicalKind::GL, 3, 4},
      {"pgl", ClassicalKind::GL, 4, 2},  {"pgu", ClassicalKind::GU, 3, 2},
      {"pgu", ClassicalKind::GU, 3, 4},  {"pgu", ClassicalKind::GU, 4, 2},
      {"psu", ClassicalKind::SU, 3, 3}};
  for (const auto& s : specs)
    out.push_back({std::string(s.fam) + "(" + std::to_string(s.d) + "," + std::to_string(s.q) + ")",
                   projective_group_order(s.kind, s.d, s.q)});
  out.push_back({"psigmal(2,8)", 1512});
  out.push_back({"psigmau(3,3)", 12096});
  out.push_back({"aut_psl34", 241920});
  return out;
}

}  // namespace autorbit
