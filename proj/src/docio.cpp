#include "catale/docio.hpp"

#include <map>

#include "json.hpp"

namespace catale {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw Error(ErrorKind::Parse, "malformed JSON document");
  }
  return doc;
}

std::map<std::string, Idx> index_names(const std::vector<std::string>& names,
                                       const std::string& what) {
  std::map<std::string, Idx> index;
  for (size_t i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], static_cast<Idx>(i)).second) {
      throw Error(ErrorKind::Parse, "duplicate " + what + ": " + names[i]);
    }
  }
  return index;
}

Idx lookup(const std::map<std::string, Idx>& index, const std::string& name,
           const std::string& what) {
  const auto it = index.find(name);
  if (it == index.end()) {
    throw Error(ErrorKind::Parse, "unknown " + what + ": " + name);
  }
  return it->second;
}

std::vector<std::string> string_list(const json& value, const std::string& what) {
  if (!value.is_array()) {
    throw Error(ErrorKind::Parse, what + " must be an array");
  }
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) {
      throw Error(ErrorKind::Parse, what + " entries must be strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

std::string print_category(const FinCategory& cat) {
  json doc;
  doc["objects"] = cat.objects();
  json morphisms = json::array();
  for (const Morphism& m : cat.morphisms()) {
    morphisms.push_back({{"name", m.name},
                         {"dom", cat.object_name(m.dom)},
                         {"cod", cat.object_name(m.cod)}});
  }
  doc["morphisms"] = morphisms;
  json identities = json::object();
  for (Idx x = 0; x < cat.object_count(); ++x) {
    identities[cat.object_name(x)] = cat.morphism(cat.identity_of(x)).name;
  }
  doc["identities"] = identities;
  json compose = json::array();
  for (Idx g = 0; g < cat.morphism_count(); ++g) {
    for (Idx f = 0; f < cat.morphism_count(); ++f) {
      const Idx gf = cat.compose(g, f);
      if (gf != kNone) {
        compose.push_back({cat.morphism(g).name, cat.morphism(f).name,
                           cat.morphism(gf).name});
      }
    }
  }
  doc["compose"] = compose;
  return doc.dump();
}

FinCategory parse_category(const std::string& text) {
  const json doc = parse_text(text);
  const auto objects = string_list(doc.at("objects"), "objects");
  const auto obj_index = index_names(objects, "object");

  std::vector<Morphism> morphisms;
  std::vector<std::string> morphism_names;
  for (const auto& entry : doc.at("morphisms")) {
    Morphism m;
    m.name = entry.at("name").get<std::string>();
    m.dom = lookup(obj_index, entry.at("dom").get<std::string>(), "object");
    m.cod = lookup(obj_index, entry.at("cod").get<std::string>(), "object");
    morphism_names.push_back(m.name);
    morphisms.push_back(std::move(m));
  }
  const auto mor_index = index_names(morphism_names, "morphism");

  std::vector<Idx> identity(objects.size(), kNone);
  for (const auto& [obj, mor] : doc.at("identities").items()) {
    identity[lookup(obj_index, obj, "object")] =
        lookup(mor_index, mor.get<std::string>(), "morphism");
  }
  for (size_t x = 0; x < identity.size(); ++x) {
    if (identity[x] == kNone) {
      throw Error(ErrorKind::Parse, "missing identity for " + objects[x]);
    }
  }

  const Idx m = static_cast<Idx>(morphisms.size());
  std::vector<Idx> compose(static_cast<size_t>(m) * m, kNone);
  for (const auto& entry : doc.at("compose")) {
    if (!entry.is_array() || entry.size() != 3) {
      throw Error(ErrorKind::Parse, "compose entries must be [g, f, gf]");
    }
    const Idx g = lookup(mor_index, entry[0].get<std::string>(), "morphism");
    const Idx f = lookup(mor_index, entry[1].get<std::string>(), "morphism");
    const Idx gf = lookup(mor_index, entry[2].get<std::string>(), "morphism");
    compose[static_cast<size_t>(g) * m + f] = gf;
  }
  return FinCategory(objects, std::move(morphisms), std::move(identity),
                     std::move(compose));
}

std::string print_psg(const PartialSemigroup& psg) {
  json doc;
  doc["elements"] = psg.elements();
  json product = json::array();
  for (Idx a = 0; a < psg.size(); ++a) {
    for (Idx b = 0; b < psg.size(); ++b) {
      const Idx ab = psg.product(a, b);
      if (ab != kNone) {
        product.push_back({psg.element_name(a), psg.element_name(b),
                           psg.element_name(ab)});
      }
    }
  }
  doc["product"] = product;
  return doc.dump();
}

PartialSemigroup parse_psg(const std::string& text) {
  const json doc = parse_text(text);
  const auto elements = string_list(doc.at("elements"), "elements");
  const auto index = index_names(elements, "element");
  const Idx n = static_cast<Idx>(elements.size());
  std::vector<Idx> table(static_cast<size_t>(n) * n, kNone);
  for (const auto& entry : doc.at("product")) {
    if (!entry.is_array() || entry.size() != 3) {
      throw Error(ErrorKind::Parse, "product entries must be [a, b, c]");
    }
    const Idx a = lookup(index, entry[0].get<std::string>(), "element");
    const Idx b = lookup(index, entry[1].get<std::string>(), "element");
    const Idx c = lookup(index, entry[2].get<std::string>(), "element");
    table[static_cast<size_t>(a) * n + b] = c;
  }
  return PartialSemigroup(elements, std::move(table));
}

std::string print_space(const FinSpace& space) {
  json doc;
  doc["points"] = space.points();
  json opens = json::array();
  for (Mask u : space.opens()) {
    json open = json::array();
    for (Idx x = 0; x < space.point_count(); ++x) {
      if (u >> x & 1) open.push_back(space.point_name(x));
    }
    opens.push_back(open);
  }
  doc["opens"] = opens;
  return doc.dump();
}

FinSpace parse_space(const std::string& text) {
  const json doc = parse_text(text);
  const auto points = string_list(doc.at("points"), "points");
  const auto index = index_names(points, "point");
  std::vector<Mask> opens;
  for (const auto& open : doc.at("opens")) {
    Mask u = 0;
    for (const auto& name : string_list(open, "open set")) {
      u |= Mask{1} << lookup(index, name, "point");
    }
    opens.push_back(u);
  }
  return FinSpace(points, std::move(opens));
}

std::string print_msl(const MeetSemilattice& msl) {
  json doc;
  doc["elements"] = msl.elements();
  json leq = json::array();
  for (Idx a = 0; a < msl.size(); ++a) {
    for (Idx b = 0; b < msl.size(); ++b) {
      if (msl.leq(a, b)) {
        leq.push_back({msl.element_name(a), msl.element_name(b)});
      }
    }
  }
  doc["leq"] = leq;
  doc["top"] = msl.element_name(msl.top());
  return doc.dump();
}

MeetSemilattice parse_msl(const std::string& text) {
  const json doc = parse_text(text);
  const auto elements = string_list(doc.at("elements"), "elements");
  const auto index = index_names(elements, "element");
  const Idx n = static_cast<Idx>(elements.size());
  std::vector<bool> leq(static_cast<size_t>(n) * n, false);
  for (const auto& entry : doc.at("leq")) {
    if (!entry.is_array() || entry.size() != 2) {
      throw Error(ErrorKind::Parse, "leq entries must be [a, b]");
    }
    const Idx a = lookup(index, entry[0].get<std::string>(), "element");
    const Idx b = lookup(index, entry[1].get<std::string>(), "element");
    leq[static_cast<size_t>(a) * n + b] = true;
  }
  const Idx top = lookup(index, doc.at("top").get<std::string>(), "element");
  return MeetSemilattice(elements, std::move(leq), top);
}

Fixture parse_any(const std::string& text) {
  const json doc = parse_text(text);
  Fixture out;
  if (doc.contains("objects")) {
    out.category = parse_category(text);
  } else if (doc.contains("product")) {
    out.psg = parse_psg(text);
  } else if (doc.contains("points")) {
    out.space = parse_space(text);
  } else if (doc.contains("leq")) {
    out.msl = parse_msl(text);
  } else {
    throw Error(ErrorKind::Parse, "unrecognized document kind");
  }
  return out;
}

std::string dot_category(const FinCategory& cat) {
  std::string out = "digraph category {\n";
  for (Idx x = 0; x < cat.object_count(); ++x) {
    out += "  \"" + cat.object_name(x) + "\";\n";
  }
  for (Idx f = 0; f < cat.morphism_count(); ++f) {
    if (cat.is_identity(f)) continue;
    out += "  \"" + cat.object_name(cat.dom(f)) + "\" -> \"" +
           cat.object_name(cat.cod(f)) + "\" [label=\"" + cat.morphism(f).name +
           "\"];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace catale
