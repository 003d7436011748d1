#include "marks/group.hpp"

#include <algorithm>
#include <mutex>

#include "marks/error.hpp"

namespace marks {

ElementTable::ElementTable(std::vector<Permutation> elements) : elements_(std::move(elements)) {
  index_.reserve(elements_.size() * 2);
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], static_cast<std::uint32_t>(i));
}

std::optional<std::uint32_t> ElementTable::index_of(const Permutation& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::uint32_t ElementTable::at(const Permutation& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) throw PreconditionError("element is not in the group");
  return it->second;
}

struct Group::Impl {
  explicit Impl(std::size_t degree) : chain(degree) {}

  StabilizerChain chain;
  std::vector<Permutation> generators;
  std::uint64_t order = 1;

  mutable std::once_flag elements_once;
  mutable std::unique_ptr<ElementTable> element_table;
  mutable std::once_flag conjugacy_once;
  mutable std::unique_ptr<ConjugacyData> conjugacy;
  mutable std::once_flag maps_once;
  mutable std::vector<std::vector<std::uint32_t>> conjugation_maps;
};

Group::Group() : Group(1, std::span<const Permutation>{}) {}

Group::Group(std::size_t degree, std::initializer_list<Permutation> generators)
    : Group(degree, std::span<const Permutation>(generators.begin(), generators.size())) {}

Group::Group(std::size_t degree, std::span<const Permutation> generators) {
  if (degree < 1) throw PreconditionError("group degree must be at least 1");
  auto impl = std::make_shared<Impl>(degree);
  for (const auto& g : generators) {
    if (g.degree() != degree) throw PreconditionError("generator degree does not match group degree");
    if (impl->chain.add(g)) impl->generators.push_back(g);
  }
  impl->order = impl->chain.order();
  impl_ = std::move(impl);
}

Group Group::trivial(std::size_t degree) { return Group(degree, std::span<const Permutation>{}); }

std::size_t Group::degree() const noexcept { return impl_->chain.degree(); }
const std::vector<Permutation>& Group::generators() const noexcept { return impl_->generators; }
const StabilizerChain& Group::chain() const noexcept { return impl_->chain; }
std::uint64_t Group::order() const noexcept { return impl_->order; }
bool Group::contains(const Permutation& g) const { return impl_->chain.contains(g); }

bool Group::is_subgroup_of(const Group& other) const {
  if (degree() != other.degree()) return false;
  return std::all_of(generators().begin(), generators().end(), [&](const auto& g) { return other.contains(g); });
}

bool Group::same_elements(const Group& other) const {
  return order() == other.order() && is_subgroup_of(other);
}

Group Group::conjugate_by(const Permutation& g) const {
  std::vector<Permutation> gens;
  gens.reserve(generators().size());
  for (const auto& h : generators()) gens.push_back(h.conjugate_by(g));
  return Group(degree(), gens);
}

Group Group::join(const Permutation& extra) const {
  std::vector<Permutation> gens(generators());
  gens.push_back(extra);
  return Group(degree(), gens);
}

Group Group::join(const Group& other) const {
  std::vector<Permutation> gens(generators());
  gens.insert(gens.end(), other.generators().begin(), other.generators().end());
  return Group(degree(), gens);
}

const ElementTable& Group::elements() const {
  std::call_once(impl_->elements_once, [this] {
    if (order() > element_table_limit)
      throw CapExceededError("group of order " + std::to_string(order()) + " is too large to enumerate");
    impl_->element_table = std::make_unique<ElementTable>(impl_->chain.enumerate());
  });
  return *impl_->element_table;
}

const ConjugacyData& Group::conjugacy() const {
  std::call_once(impl_->conjugacy_once, [this] {
    const ElementTable& table = elements();
    auto data = std::make_unique<ConjugacyData>();
    const std::size_t n = table.size();
    constexpr std::uint32_t unseen = ~std::uint32_t{0};
    data->class_of.assign(n, unseen);
    data->from_rep.assign(n, Permutation());
    const auto& maps = conjugation_maps();
    for (std::uint32_t start = 0; start < n; ++start) {
      if (data->class_of[start] != unseen) continue;
      auto cls = static_cast<std::uint32_t>(data->class_rep.size());
      data->class_rep.push_back(start);
      data->class_of[start] = cls;
      data->from_rep[start] = Permutation(degree());
      std::vector<std::uint32_t> queue{start};
      for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint32_t e = queue[head];
        for (std::size_t k = 0; k < generators().size(); ++k) {
          const Permutation& s = generators()[k];
          std::uint32_t f = maps[k][e];
          if (data->class_of[f] != unseen) continue;
          data->class_of[f] = cls;
          data->from_rep[f] = data->from_rep[e] * s;
          queue.push_back(f);
        }
      }
      data->class_size.push_back(queue.size());
    }
    impl_->conjugacy = std::move(data);
  });
  return *impl_->conjugacy;
}

const std::vector<std::vector<std::uint32_t>>& Group::conjugation_maps() const {
  std::call_once(impl_->maps_once, [this] {
    const ElementTable& table = elements();
    std::vector<std::vector<std::uint32_t>> maps;
    for (const auto& s : generators()) {
      std::vector<std::uint32_t> map(table.size());
      for (std::uint32_t e = 0; e < table.size(); ++e) map[e] = table.at(table[e].conjugate_by(s));
      maps.push_back(std::move(map));
    }
    impl_->conjugation_maps = std::move(maps);
  });
  return impl_->conjugation_maps;
}

}  // namespace marks
