#include "mimpaths/fragment_table.hpp"

#include <functional>

namespace mimpaths {

namespace {

void mix(std::size_t& h, std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); }

}  // namespace

std::size_t FragmentKeyHash::operator()(const FragmentKey& k) const {
    std::size_t h = k.m.hash();
    for (const auto& e : k.s) mix(h, static_cast<std::size_t>(e.u) * 1000003U + static_cast<std::size_t>(e.v));
    mix(h, 0xabcdefU);
    for (auto [a, b] : k.q) mix(h, static_cast<std::size_t>(a) * 1000003U + static_cast<std::size_t>(b));
    for (int l : k.labels) mix(h, static_cast<std::size_t>(l));
    mix(h, static_cast<std::size_t>(k.j));
    return h;
}

std::size_t FragmentTable::one_entries() const {
    std::size_t c = 0;
    for (const auto& e : entries_) c += e.sizes.size();
    return c;
}

void FragmentTable::add(const FragmentKey& key, int size, const BackPointer& from) {
    auto [it, inserted] = index_.emplace(key, static_cast<int>(entries_.size()));
    if (inserted) entries_.push_back(TableEntry{key, {}});
    entries_[static_cast<std::size_t>(it->second)].sizes.emplace(size, from);
}

const TableEntry* FragmentTable::find(const FragmentKey& key) const {
    int i = index_of(key);
    return i < 0 ? nullptr : &entries_[static_cast<std::size_t>(i)];
}

int FragmentTable::index_of(const FragmentKey& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? -1 : it->second;
}

}  // namespace mimpaths
