#include "pq/generators.hpp"

#include <charconv>

#include "pq/error.hpp"

namespace pq {

std::string GenRef::str() const {
  switch (kind) {
    case GenKind::Y: return "y" + std::to_string(index);
    case GenKind::X: return "x" + std::to_string(index);
    case GenKind::Omega: return "Omega" + std::to_string(index);
  }
  return {};
}

std::string GenRef::target_str() const {
  if (kind == GenKind::Omega) throw InvalidArgument("Omega has no torus counterpart");
  return (kind == GenKind::Y ? "Y" : "X") + std::to_string(index);
}

GenRef parse_genref(std::string_view text, bool target) {
  GenRef g;
  std::string_view rest;
  if (text.starts_with("Omega")) {
    g.kind = GenKind::Omega;
    rest = text.substr(5);
  } else if (!text.empty()) {
    char c = text.front();
    char y = target ? 'Y' : 'y', x = target ? 'X' : 'x';
    if (c == y) g.kind = GenKind::Y;
    else if (c == x) g.kind = GenKind::X;
    else throw UnknownVariable("unknown generator '" + std::string(text) + "'");
    rest = text.substr(1);
  }
  if (target && g.kind == GenKind::Omega) throw UnknownVariable("unknown generator '" + std::string(text) + "'");
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), g.index);
  if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size() || g.index < 1)
    throw UnknownVariable("unknown generator '" + std::string(text) + "'");
  return g;
}

VarSpecPtr an_varspec(int n, std::string_view y, std::string_view x) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) {
    names.push_back(std::string(y) + std::to_string(i));
    names.push_back(std::string(x) + std::to_string(i));
  }
  return make_varspec(std::move(names));
}

}  // namespace pq
