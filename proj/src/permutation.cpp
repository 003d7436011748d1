#include "marks/permutation.hpp"

#include <cctype>
#include <numeric>
#include <string>

#include "marks/error.hpp"

namespace marks {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (Point y : images_) {
    if (y >= images_.size() || hit[y])
      throw PreconditionError("permutation images are not a bijection");
    hit[y] = true;
  }
}

std::vector<Point> Permutation::one_based_images() const {
  std::vector<Point> out(images_);
  for (auto& y : out) ++y;
  return out;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::optional<Point> Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return static_cast<Point>(i);
  return std::nullopt;
}

std::size_t Permutation::fixed_point_count() const noexcept {
  std::size_t n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) ++n;
  return n;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (rhs.degree() != degree()) throw PreconditionError("degree mismatch in product");
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
  return out;
}

Permutation& Permutation::operator*=(const Permutation& rhs) {
  if (rhs.degree() != degree()) throw PreconditionError("degree mismatch in product");
  for (auto& y : images_) y = rhs.images_[y];
  return *this;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
  return out;
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent) : static_cast<std::uint64_t>(exponent);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Permutation Permutation::conjugate_by(const Permutation& g) const {
  if (g.degree() != degree()) throw PreconditionError("degree mismatch in conjugation");
  // x.(g^-1 h g): for y = x.g^-1 ... equivalently images[g[x]] = g[h[x]]
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) out.images_[g.images_[x]] = g.images_[images_[x]];
  return out;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(images_.size(), false);
  std::uint64_t result = 1;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

std::size_t Permutation::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point y : images_) {
    h ^= y;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

Permutation compose(const Permutation& g, const Permutation& h) { return g * h; }

Permutation inverse(const Permutation& g) { return g.inverse(); }

Point act(Point x, const Permutation& g) {
  if (x >= g.degree()) throw PreconditionError("point outside the permutation domain");
  return g[x];
}

namespace {

class CycleParser {
 public:
  CycleParser(std::string_view text, std::size_t degree) : text_(text), degree_(degree) {}

  Permutation run() {
    std::vector<Point> images(degree_);
    std::iota(images.begin(), images.end(), Point{0});
    std::vector<bool> used(degree_, false);
    skip_space();
    if (at_end()) return Permutation(std::move(images));
    if (peek() == '(') {
      std::size_t save = pos_;
      ++pos_;
      skip_space();
      if (!at_end() && peek() == ')') {
        ++pos_;
        skip_space();
        if (at_end()) return Permutation(std::move(images));
        fail("\"()\" may only denote the identity on its own");
      }
      pos_ = save;
    }
    while (!at_end()) {
      expect('(');
      std::vector<Point> cycle;
      cycle.push_back(read_point(used));
      skip_space();
      while (!at_end() && peek() == ',') {
        ++pos_;
        cycle.push_back(read_point(used));
        skip_space();
      }
      expect(')');
      for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
      skip_space();
    }
    return Permutation(std::move(images));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cycle notation: " + what + " at offset " + std::to_string(pos_) + " in \"" +
                     std::string(text_) + "\"");
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Point read_point(std::vector<bool>& used) {
    skip_space();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a point");
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (value > degree_) fail("point out of range 1.." + std::to_string(degree_));
      ++pos_;
    }
    if (value < 1) fail("point out of range 1.." + std::to_string(degree_));
    auto p = static_cast<Point>(value - 1);
    if (used[p]) fail("repeated point " + std::to_string(value));
    used[p] = true;
    return p;
  }

  std::string_view text_;
  std::size_t degree_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_perm(std::string_view text, std::size_t degree) {
  if (degree < 1) throw PreconditionError("degree must be at least 1");
  return CycleParser(text, degree).run();
}

std::string format_perm(const Permutation& g) {
  std::string out;
  std::vector<bool> seen(g.degree(), false);
  for (Point i = 0; i < g.degree(); ++i) {
    if (seen[i] || g[i] == i) continue;
    out += '(';
    bool first = true;
    for (Point j = i; !seen[j]; j = g[j]) {
      seen[j] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace marks
