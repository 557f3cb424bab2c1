#include "autorbit/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "autorbit/errors.hpp"

namespace autorbit {

Permutation::Permutation(std::size_t degree) {
  if (degree == 0 || degree > kMaxDegree)
    throw BadParameter("permutation degree must be in [1, 65535]");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty() || images_.size() > kMaxDegree)
    throw BadParameter("permutation degree must be in [1, 65535]");
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw BadParameter("image list is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_span(std::span<const Point> images) {
  return Permutation(std::vector<Point>(images.begin(), images.end()));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto& c : cycle_decompose(*this).cycles)
    result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
  return result;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw DegreeMismatch("compose: degree mismatch");
  std::vector<Point> r(p.degree());
  for (std::size_t x = 0; x < r.size(); ++x) r[x] = p.images_[q.images_[x]];
  return Permutation(std::move(r), Permutation::Unchecked{});
}

Permutation inverse(const Permutation& p) {
  std::vector<Point> r(p.degree());
  for (std::size_t x = 0; x < r.size(); ++x) r[p.images_[x]] = static_cast<Point>(x);
  return Permutation(std::move(r), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  return compose(compose(g, x), inverse(g));
}

std::vector<std::size_t> CycleSet::cycle_type() const {
  std::vector<std::size_t> t;
  t.reserve(cycles.size());
  for (const auto& c : cycles) t.push_back(c.size());
  std::sort(t.begin(), t.end(), std::greater<>());
  return t;
}

Permutation CycleSet::to_permutation() const {
  std::vector<Point> images(degree);
  for (const auto& c : cycles)
    for (std::size_t j = 0; j < c.size(); ++j) images[c[j]] = c[(j + 1) % c.size()];
  return Permutation(std::move(images));
}

std::string CycleSet::to_string() const {
  std::string out;
  for (const auto& c : cycles) {
    if (c.size() < 2) continue;
    out += '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) out += ' ';
      out += std::to_string(c[j] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

CycleSet cycle_decompose(const Permutation& p) {
  CycleSet cs;
  cs.degree = p.degree();
  std::vector<bool> done(p.degree(), false);
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (done[start]) continue;
    std::vector<Point> cycle;
    for (std::size_t x = start; !done[x]; x = p(x)) {
      done[x] = true;
      cycle.push_back(static_cast<Point>(x));
    }
    cs.cycles.push_back(std::move(cycle));
  }
  return cs;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation result(degree);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  skip_space();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("cycle string: expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_space();
      if (i >= text.size()) throw ParseError("cycle string: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("cycle string: unexpected character '" + std::string(1, text[i]) + "'");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        value = value * 10 + static_cast<std::size_t>(text[i++] - '0');
      if (value < 1 || value > degree)
        throw ParseError("cycle string: point " + std::to_string(value) + " outside 1.." +
                         std::to_string(degree));
      cycle.push_back(static_cast<Point>(value - 1));
    }
    std::vector<Point> id(degree);
    std::iota(id.begin(), id.end(), Point{0});
    for (std::size_t j = 0; j < cycle.size(); ++j) id[cycle[j]] = cycle[(j + 1) % cycle.size()];
    // rightmost cycle acts first; a repeated point inside one cycle fails the bijection check
    result = compose(result, Permutation(std::move(id)));
    skip_space();
  }
  return result;
}

}  // namespace autorbit
