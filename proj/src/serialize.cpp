#include "ddm/serialize.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>

#include "ddm/errors.hpp"

namespace ddm {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

int parse_int(std::string_view s, std::string_view context) {
  const std::string t = trim(s);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParseError("expected an integer in '" + std::string(context) + "'");
  }
  return v;
}

std::pair<int, int> parse_two(std::string_view s, std::string_view context) {
  const auto comma = s.find(',');
  if (comma == std::string_view::npos) throw ParseError("expected two comma-separated integers in '" + std::string(context) + "'");
  return {parse_int(s.substr(0, comma), context), parse_int(s.substr(comma + 1), context)};
}

std::size_t layer_dim(const Dihedral& g, const GradedCharacter::Layer& layer) {
  std::size_t d = 0;
  for (const auto& [label, mult] : layer.summands) d += mult * Catalog::get(g).entry(label).module.dim();
  return d;
}

}  // namespace

std::string label_to_string(const WeightLabel& label) {
  const std::string p = std::to_string(label.p);
  const std::string q = std::to_string(label.q);
  switch (label.family) {
    case Family::EChi:
      return "e:chi" + p;
    case Family::ERho:
      return "e:rho" + p;
    case Family::YnChi:
      return "yn:chi" + p;
    case Family::YnRho:
      return "yn:rho" + p;
    case Family::Mik:
      return "M" + p + "," + q;
    case Family::Mx:
      return "Mx:" + p + "," + q;
    case Family::Mxy:
      return "Mxy:" + p + "," + q;
  }
  throw DomainError("unknown weight family");
}

WeightLabel parse_label(const Dihedral& g, std::string_view text) {
  const std::string s = trim(text);
  auto starts = [&](std::string_view prefix) { return s.rfind(prefix, 0) == 0; };
  auto rest = [&](std::string_view prefix) { return std::string_view(s).substr(prefix.size()); };
  WeightLabel out;
  if (starts("e:chi")) {
    out = WeightLabel::e_chi(parse_int(rest("e:chi"), s));
  } else if (starts("e:rho")) {
    out = WeightLabel::e_rho(parse_int(rest("e:rho"), s));
  } else if (starts("yn:chi")) {
    out = WeightLabel::yn_chi(parse_int(rest("yn:chi"), s));
  } else if (starts("yn:rho")) {
    out = WeightLabel::yn_rho(parse_int(rest("yn:rho"), s));
  } else if (starts("Mxy:")) {
    const auto [a, b] = parse_two(rest("Mxy:"), s);
    out = WeightLabel::mxy(a, b);
  } else if (starts("Mx:")) {
    const auto [a, b] = parse_two(rest("Mx:"), s);
    out = WeightLabel::mx(a, b);
  } else if (starts("M")) {
    const auto [a, b] = parse_two(rest("M"), s);
    out = WeightLabel::mik(a, b);
  } else {
    throw ParseError("unknown weight label '" + s + "'");
  }
  validate_label(g, out);
  return out;
}

std::string index_set_to_string(const IndexSet& I) {
  std::string out;
  for (std::size_t p = 0; p < I.size(); ++p) {
    if (p > 0) out += ",";
    out += "(" + std::to_string(I[p].i) + "," + std::to_string(I[p].k) + ")";
  }
  return out;
}

IndexSet parse_index_set(const Dihedral& g, std::string_view text) {
  const std::string s = trim(text);
  std::vector<Pair> pairs;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(') throw ParseError("index set must look like (i1,k1),(i2,k2): '" + s + "'");
    const auto close = s.find(')', pos);
    if (close == std::string::npos) throw ParseError("unbalanced parenthesis in '" + s + "'");
    const auto [i, k] = parse_two(std::string_view(s).substr(pos + 1, close - pos - 1), s);
    pairs.push_back({i, k});
    pos = close + 1;
    while (pos < s.size() && (s[pos] == ' ' || s[pos] == ',')) ++pos;
  }
  return validate_index_set(g, pairs);
}

nlohmann::json character_to_json(const Dihedral& g, const GradedCharacter& c) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& layer : c.layers) {
    nlohmann::json summands = nlohmann::json::array();
    for (const auto& [label, mult] : layer.summands) {
      summands.push_back({{"label", label_to_string(label)}, {"mult", mult}});
    }
    out.push_back({{"degree", layer.degree}, {"dimension", layer_dim(g, layer)}, {"summands", summands}});
  }
  return out;
}

GradedCharacter character_from_json(const Dihedral& g, const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("graded character must be a JSON array");
  GradedCharacter out;
  try {
    for (const auto& layer : j) {
      const int degree = layer.at("degree").get<int>();
      for (const auto& s : layer.at("summands")) {
        const auto mult = s.at("mult").get<std::size_t>();
        if (mult == 0) throw ParseError("multiplicities must be positive");
        out.add(degree, parse_label(g, s.at("label").get<std::string>()), mult);
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graded character: ") + e.what());
  }
  return out;
}

std::string character_table(const Dihedral& g, const GradedCharacter& c) {
  std::ostringstream os;
  os << std::left << std::setw(8) << "degree" << std::setw(6) << "dim" << "summands\n";
  for (const auto& layer : c.layers) {
    std::string parts;
    for (const auto& [label, mult] : layer.summands) {
      if (!parts.empty()) parts += " + ";
      parts += (mult > 1 ? std::to_string(mult) + "*" : "") + label_to_string(label);
    }
    os << std::setw(8) << layer.degree << std::setw(6) << layer_dim(g, layer) << parts << "\n";
  }
  return os.str();
}

}  // namespace ddm
