#include "riesz/terms.hpp"

#include <charconv>

namespace riesz {

namespace {

std::string_view trim(std::string_view s, std::size_t& offset) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
    ++offset;
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::size_t offset) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (s.empty() || res.ec != std::errc() || res.ptr != end) {
    throw TermSyntaxError("invalid integer '" + std::string(s) + "'", offset);
  }
  return v;
}

// Kind plus a possibly unnormalized frequency vector.
struct RawSpec {
  BasisKind kind;
  IntVector alpha;
};

RawSpec parse_raw(std::string_view text, std::size_t offset) {
  text = trim(text, offset);
  if (text == "const") return {BasisKind::Constant, IntVector()};
  if (text.size() < 3 || (text[0] != 'C' && text[0] != 'S') || text[1] != ':') {
    throw TermSyntaxError("expected 'const', 'C:<ints>' or 'S:<ints>', got '" + std::string(text) + "'", offset);
  }
  const BasisKind kind = text[0] == 'C' ? BasisKind::CosLike : BasisKind::SinLike;
  std::vector<std::int64_t> entries;
  std::size_t pos = 2;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::size_t off = offset + pos;
    entries.push_back(parse_int(trim(text.substr(pos, end - pos), off), off));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  IntVector alpha(static_cast<Eigen::Index>(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) alpha[static_cast<Eigen::Index>(i)] = entries[i];
  if (alpha.isZero()) throw TermSyntaxError("zero frequency vector", offset);
  return {kind, alpha};
}

BasisFunction make(BasisKind kind, RidgeIndex idx) {
  return kind == BasisKind::CosLike ? BasisFunction::cos_like(std::move(idx)) : BasisFunction::sin_like(std::move(idx));
}

}  // namespace

BasisFunction parse_basis(std::string_view text, Eigen::Index dim) {
  const RawSpec raw = parse_raw(text, 0);
  if (raw.kind == BasisKind::Constant) return BasisFunction::constant(dim > 0 ? dim : 1);
  if (!is_positive_direction(raw.alpha)) {
    throw TermSyntaxError("first nonzero entry of the index must be positive in '" + std::string(text) + "'", 0);
  }
  if (dim > 0 && raw.alpha.size() != dim) throw TermSyntaxError("dimension mismatch in '" + std::string(text) + "'", 0);
  try {
    return make(raw.kind, RidgeIndex(raw.alpha));
  } catch (const std::invalid_argument& e) {
    throw TermSyntaxError(e.what(), 0);
  }
}

std::vector<Term> parse_terms(std::string_view text) {
  std::vector<Term> out;
  std::vector<std::size_t> constant_slots;
  Eigen::Index dim = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t bar = text.find('|', start);
    const std::size_t end = bar == std::string_view::npos ? text.size() : bar;
    std::size_t offset = start;
    std::string_view item = trim(text.substr(start, end - start), offset);
    if (item.empty()) throw TermSyntaxError("empty term", offset);

    double coef = 1.0;
    const std::size_t star = item.find('*');
    if (star != std::string_view::npos) {
      std::size_t coff = offset;
      const std::string_view c = trim(item.substr(0, star), coff);
      const auto* cend = c.data() + c.size();
      const auto res = std::from_chars(c.data(), cend, coef);
      if (c.empty() || res.ec != std::errc() || res.ptr != cend || !std::isfinite(coef)) {
        throw TermSyntaxError("invalid coefficient '" + std::string(c) + "'", coff);
      }
      offset += star + 1;
      item = item.substr(star + 1);
    }
    const RawSpec raw = parse_raw(item, offset);
    if (raw.kind == BasisKind::Constant) {
      constant_slots.push_back(out.size());
      out.push_back({coef, BasisFunction::constant(1)});
    } else {
      if (dim == 0) dim = raw.alpha.size();
      if (raw.alpha.size() != dim) throw TermSyntaxError("mixed dimensions in term list", offset);
      bool flipped = false;
      RidgeIndex idx = [&] {
        try {
          return RidgeIndex::normalized(raw.alpha, &flipped);
        } catch (const std::invalid_argument& e) {
          throw TermSyntaxError(e.what(), offset);
        }
      }();
      if (flipped && raw.kind == BasisKind::SinLike) coef = -coef;
      out.push_back({coef, make(raw.kind, std::move(idx))});
    }
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  if (dim > 1) {
    for (auto slot : constant_slots) out[slot].function = BasisFunction::constant(dim);
  }
  return out;
}

}  // namespace riesz
