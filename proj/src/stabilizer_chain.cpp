#include "marks/stabilizer_chain.hpp"

#include <limits>

#include "marks/error.hpp"

namespace marks {

StabilizerChain::StabilizerChain(std::size_t degree) : degree_(degree) {}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& level = levels_[i];
    Point beta = g[level.base];
    std::int32_t s = level.slot[beta];
    if (s < 0) return {std::move(g), i};
    g *= level.transversal_inverse[static_cast<std::size_t>(s)];
  }
  return {std::move(g), levels_.size()};
}

Permutation StabilizerChain::sift(Permutation g, std::size_t from) const {
  return strip(std::move(g), from).first;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return strip(g, 0).first.is_identity();
}

bool StabilizerChain::add(const Permutation& g) {
  if (g.degree() != degree_) throw PreconditionError("generator degree does not match the chain");
  auto [residue, level] = strip(g, 0);
  if (residue.is_identity()) return false;
  add_generator(0, level, std::move(residue));
  return true;
}

// g fixes the base points of levels below `to`, so it joins every level from `from` to `to`.
void StabilizerChain::add_generator(std::size_t from, std::size_t to, Permutation g) {
  for (std::size_t k = to + 1; k-- > from;) extend_level(k, g);
}

void StabilizerChain::extend_level(std::size_t k, const Permutation& g) {
  if (k == levels_.size()) {
    Level fresh;
    fresh.base = *g.first_moved_point();
    fresh.slot.assign(degree_, -1);
    fresh.slot[fresh.base] = 0;
    fresh.orbit.push_back(fresh.base);
    fresh.transversal.emplace_back(degree_);
    fresh.transversal_inverse.emplace_back(degree_);
    levels_.push_back(std::move(fresh));
  }
  levels_[k].generators.push_back(g);
  const std::size_t known = levels_[k].orbit.size();
  for (std::size_t i = 0; i < known; ++i) process(k, levels_[k].transversal[i] * g);
}

// h maps the base point of level k to some orbit point; either it extends the
// orbit, or h * u^-1 is a Schreier generator that must lie in the next stabilizer.
void StabilizerChain::process(std::size_t k, Permutation h) {
  std::vector<Permutation> work;
  work.push_back(std::move(h));
  while (!work.empty()) {
    Permutation x = std::move(work.back());
    work.pop_back();
    Point beta = x[levels_[k].base];
    std::int32_t s = levels_[k].slot[beta];
    if (s < 0) {
      Level& level = levels_[k];
      level.slot[beta] = static_cast<std::int32_t>(level.orbit.size());
      level.orbit.push_back(beta);
      level.transversal_inverse.push_back(x.inverse());
      level.transversal.push_back(x);
      for (const auto& gen : level.generators) work.push_back(x * gen);
    } else {
      Permutation schreier = x * levels_[k].transversal_inverse[static_cast<std::size_t>(s)];
      auto [residue, stop] = strip(std::move(schreier), k + 1);
      if (!residue.is_identity()) add_generator(k + 1, stop, std::move(residue));
    }
  }
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t result = 1;
  for (const auto& level : levels_) {
    std::uint64_t len = level.orbit.size();
    if (result > std::numeric_limits<std::uint64_t>::max() / len)
      throw CapExceededError("group order does not fit in 64 bits");
    result *= len;
  }
  return result;
}

std::vector<Permutation> StabilizerChain::enumerate() const {
  std::vector<Permutation> current{Permutation(degree_)};
  for (std::size_t i = levels_.size(); i-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(current.size() * levels_[i].transversal.size());
    for (const auto& e : current)
      for (const auto& u : levels_[i].transversal) next.push_back(e * u);
    current = std::move(next);
  }
  return current;
}

}  // namespace marks
