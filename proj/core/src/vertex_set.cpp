#include "hgkit/vertex_set.hpp"

#include <ostream>

#include "hgkit/errors.hpp"

namespace hgkit {

namespace {

void check_vertex(int v) {
  if (v < 0 || v >= kMaxVertices)
    throw PreconditionError("vertex id " + std::to_string(v) + " outside [0, " +
                            std::to_string(kMaxVertices) + ")");
}

}  // namespace

VertexSet::VertexSet(std::initializer_list<int> members) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(std::span<const int> members) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::range(int lo, int hi) {
  VertexSet s;
  for (int v = lo; v < hi; ++v) s.insert(v);
  return s;
}

void VertexSet::insert(int v) {
  check_vertex(v);
  bits_.set(static_cast<std::size_t>(v));
}

void VertexSet::erase(int v) {
  check_vertex(v);
  bits_.reset(static_cast<std::size_t>(v));
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  VertexSet::Bits diff = a.bits_ ^ b.bits_;
  int d = diff.first();
  if (d < 0) return std::strong_ordering::equal;
  // Both sequences agree below d. The one holding d is smaller unless the
  // other one has run out of members (it is then a proper prefix).
  if (a.bits_.test(static_cast<std::size_t>(d)))
    return b.bits_.next(d) >= 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.bits_.next(d) >= 0 ? std::strong_ordering::greater : std::strong_ordering::less;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  bits_.for_each([&](int v) { out.push_back(v); });
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  bits_.for_each([&](int v) {
    if (!first) s += ',';
    s += std::to_string(v);
    first = false;
  });
  s += '}';
  return s;
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) { return os << s.to_string(); }

}  // namespace hgkit
