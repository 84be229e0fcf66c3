#include "slgrowth/element_set.hpp"

#include <absl/container/flat_hash_set.h>

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "slgrowth/errors.hpp"

namespace slgrowth {

namespace {

struct Probe {
  const ElementSet::Entry* data;
};

std::uint64_t mix(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace

struct ElementSet::Store {
  std::size_t width;  // entries per element (n*n)
  std::vector<Entry> buffer;

  const Entry* ptr(std::uint32_t idx) const noexcept { return buffer.data() + static_cast<std::size_t>(idx) * width; }

  struct Hash {
    using is_transparent = void;
    const Store* store;
    std::size_t hash(const Entry* d) const noexcept {
      std::uint64_t h = 0x9E3779B97F4A7C15ULL;
      std::size_t i = 0;
      for (; i + 4 <= store->width; i += 4) {
        std::uint64_t chunk = std::uint64_t{d[i]} | (std::uint64_t{d[i + 1]} << 16) |
                              (std::uint64_t{d[i + 2]} << 32) | (std::uint64_t{d[i + 3]} << 48);
        h = mix(h ^ chunk);
      }
      std::uint64_t tail = 0;
      for (int shift = 0; i < store->width; ++i, shift += 16) tail |= std::uint64_t{d[i]} << shift;
      return static_cast<std::size_t>(mix(h ^ tail ^ store->width));
    }
    std::size_t operator()(std::uint32_t idx) const noexcept { return hash(store->ptr(idx)); }
    std::size_t operator()(Probe p) const noexcept { return hash(p.data); }
  };

  struct Eq {
    using is_transparent = void;
    const Store* store;
    bool same(const Entry* a, const Entry* b) const noexcept {
      return std::equal(a, a + store->width, b);
    }
    bool operator()(std::uint32_t a, std::uint32_t b) const noexcept { return a == b || same(store->ptr(a), store->ptr(b)); }
    bool operator()(std::uint32_t a, Probe b) const noexcept { return same(store->ptr(a), b.data); }
    bool operator()(Probe a, std::uint32_t b) const noexcept { return same(a.data, store->ptr(b)); }
  };

  absl::flat_hash_set<std::uint32_t, Hash, Eq> index;

  explicit Store(std::size_t w) : width(w), index(0, Hash{this}, Eq{this}) {}

  std::size_t count() const noexcept { return width == 0 ? 0 : buffer.size() / width; }

  bool insert(const Entry* d) {
    if (index.find(Probe{d}) != index.end()) return false;
    const auto idx = static_cast<std::uint32_t>(count());
    buffer.insert(buffer.end(), d, d + width);
    index.insert(idx);
    return true;
  }

  bool contains(const Entry* d) const { return index.find(Probe{d}) != index.end(); }
};

ElementSet::ElementSet(int n, const PrimeField& field)
    : n_(n), field_(field), store_(std::make_unique<Store>(static_cast<std::size_t>(n * n))) {
  if (n < 1) throw StructuralError("ElementSet: dimension must be positive");
}

ElementSet::ElementSet(const ElementSet& other)
    : n_(other.n_), field_(other.field_), store_(std::make_unique<Store>(other.store_->width)) {
  store_->buffer = other.store_->buffer;
  store_->index.reserve(other.size());
  for (std::uint32_t i = 0; i < other.size(); ++i) store_->index.insert(i);
}

ElementSet& ElementSet::operator=(const ElementSet& other) {
  if (this != &other) *this = ElementSet(other);
  return *this;
}

ElementSet::ElementSet(ElementSet&&) noexcept = default;
ElementSet& ElementSet::operator=(ElementSet&&) noexcept = default;
ElementSet::~ElementSet() = default;

ElementSet ElementSet::from_matrices(int n, const PrimeField& field, std::span<const Matrix> members) {
  ElementSet s(n, field);
  for (const auto& g : members) s.insert(g);
  return s;
}

ElementSet ElementSet::single(const Matrix& g) {
  ElementSet s(g.n(), g.field());
  s.insert(g);
  return s;
}

std::size_t ElementSet::size() const noexcept { return store_->count(); }

void ElementSet::check_compatible(const Matrix& g) const {
  if (g.n() != n_ || !(g.field() == field_)) {
    throw StructuralError("ElementSet: element has wrong dimension or field");
  }
}

bool ElementSet::insert(const Matrix& g) {
  check_compatible(g);
  if (!in_special_linear(g)) throw NotInGroup("ElementSet: member must have determinant 1");
  std::vector<Entry> tmp(g.entries().begin(), g.entries().end());
  return store_->insert(tmp.data());
}

bool ElementSet::insert_raw(std::span<const Entry> entries) { return store_->insert(entries.data()); }

bool ElementSet::contains(const Matrix& g) const {
  if (g.n() != n_ || !(g.field() == field_)) return false;
  std::vector<Entry> tmp(g.entries().begin(), g.entries().end());
  return store_->contains(tmp.data());
}

bool ElementSet::contains_raw(std::span<const Entry> entries) const { return store_->contains(entries.data()); }

std::span<const ElementSet::Entry> ElementSet::raw(std::size_t i) const noexcept {
  return {store_->ptr(static_cast<std::uint32_t>(i)), store_->width};
}

Matrix ElementSet::at(std::size_t i) const {
  if (i >= size()) throw StructuralError("ElementSet: index out of range");
  auto r = raw(i);
  return Matrix(n_, field_, std::vector<Residue>(r.begin(), r.end()));
}

std::vector<Matrix> ElementSet::members() const {
  std::vector<Matrix> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(at(i));
  return out;
}

ElementSet ElementSet::sorted() const {
  std::vector<std::uint32_t> order(size());
  std::iota(order.begin(), order.end(), 0U);
  const std::size_t w = store_->width;
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    const Entry* pa = store_->ptr(a);
    const Entry* pb = store_->ptr(b);
    return std::lexicographical_compare(pa, pa + w, pb, pb + w);
  });
  ElementSet out(n_, field_);
  out.reserve(size());
  for (auto idx : order) out.store_->insert(store_->ptr(idx));
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  if (n_ != other.n_ || !(field_ == other.field_)) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!other.contains_raw(raw(i))) return false;
  }
  return true;
}

bool ElementSet::same_members(const ElementSet& other) const {
  return size() == other.size() && is_subset_of(other);
}

void ElementSet::reserve(std::size_t count) {
  store_->buffer.reserve(count * store_->width);
  store_->index.reserve(count);
}

std::string ElementSet::dump() const {
  std::ostringstream os;
  os << "n=" << n_ << " p=" << field_.p() << " count=" << size() << '\n';
  ElementSet s = sorted();
  for (std::size_t i = 0; i < s.size(); ++i) os << to_hex(canonical_encode(s.at(i))) << '\n';
  return os.str();
}

ElementSet ElementSet::parse_dump(const std::string& text) {
  std::istringstream is(text);
  std::string header;
  if (!std::getline(is, header)) throw StructuralError("element dump: missing header");
  int n = 0;
  unsigned p = 0;
  std::size_t count = 0;
  if (std::sscanf(header.c_str(), "n=%d p=%u count=%zu", &n, &p, &count) != 3) {
    throw StructuralError("element dump: malformed header '" + header + "'");
  }
  PrimeField field(p);
  ElementSet s(n, field);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line.size() % 2 != 0) throw StructuralError("element dump: odd-length hex line");
    std::vector<std::uint8_t> bytes(line.size() / 2);
    for (std::size_t i = 0; i < bytes.size(); ++i) {
      bytes[i] = static_cast<std::uint8_t>(std::stoul(line.substr(2 * i, 2), nullptr, 16));
    }
    s.insert(canonical_decode(n, field, bytes));
  }
  if (s.size() != count) throw StructuralError("element dump: count does not match body");
  return s;
}

}  // namespace slgrowth
