#include "cosetorder/system.hpp"

#include <fstream>
#include <set>

#include "cosetorder/amalgam.hpp"
#include "cosetorder/cayley.hpp"
#include "cosetorder/raag.hpp"
#include "cosetorder/stallings.hpp"

namespace cosetorder {

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& j, const std::string& key) {
  if (!j.contains(key) || !j.at(key).is_array())
    throw config_error("spec needs a string array \"" + key + "\"");
  std::vector<std::string> out;
  for (const auto& e : j.at(key)) {
    if (!e.is_string())
      throw config_error("\"" + key + "\" must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<bool> mask_of(const AlphabetPtr& alphabet,
                          const std::vector<std::string>& names) {
  std::vector<bool> mask(static_cast<std::size_t>(alphabet->size()), false);
  for (const std::string& n : names) {
    int i = alphabet->index(n);
    if (i < 0) throw config_error("unknown generator \"" + n + "\"");
    mask[static_cast<std::size_t>(i)] = true;
  }
  return mask;
}

Letter single_letter(const AlphabetPtr& alphabet, const std::string& token) {
  ReducedWord w = parse_word(token, alphabet);
  if (w.size() != 1)
    throw config_error("expected a single signed generator, got \"" + token +
                       "\"");
  return w.letters().front();
}

ReducedWord gen_word(const AlphabetPtr& alphabet, int gen, int exp = 1) {
  std::vector<Letter> l{{gen, exp}};
  return ReducedWord::reduce(alphabet, l);
}

/// Generator-substitution pair list [[from, to], ...] between two free
/// factors; both maps are built, so each side must be single signed
/// letters covering its generator set exactly once.
struct EdgeIdentification {
  std::function<ReducedWord(const ReducedWord&)> forward, backward;
};

EdgeIdentification edge_identification(const AlphabetPtr& alphabet,
                                       const json& map_doc,
                                       const std::vector<bool>& from_mask,
                                       const std::vector<bool>& to_mask) {
  std::vector<ReducedWord> fwd, bwd;
  for (int i = 0; i < alphabet->size(); ++i) {
    fwd.push_back(gen_word(alphabet, i));
    bwd.push_back(gen_word(alphabet, i));
  }
  std::vector<bool> seen_from(from_mask.size(), false),
      seen_to(to_mask.size(), false);
  if (!map_doc.is_array()) throw config_error("edge map must be an array");
  for (const auto& pair : map_doc) {
    if (!pair.is_array() || pair.size() != 2)
      throw config_error("edge map entries must be [from, to] pairs");
    Letter from = single_letter(alphabet, pair.at(0).get<std::string>());
    Letter to = single_letter(alphabet, pair.at(1).get<std::string>());
    if (from.exp != 1)
      throw config_error("edge map sources must be plain generators");
    std::size_t fi = static_cast<std::size_t>(from.gen);
    std::size_t ti = static_cast<std::size_t>(to.gen);
    if (!from_mask[fi] || !to_mask[ti])
      throw config_error("edge map names a generator outside the subgroups");
    if (seen_from[fi] || seen_to[ti])
      throw config_error("edge map repeats a generator");
    seen_from[fi] = seen_to[ti] = true;
    fwd[fi] = gen_word(alphabet, to.gen, to.exp);
    bwd[ti] = gen_word(alphabet, from.gen, to.exp);  // inverse of +-1 map
  }
  for (std::size_t i = 0; i < from_mask.size(); ++i)
    if (from_mask[i] != seen_from[i] || to_mask[i] != seen_to[i])
      throw config_error("edge map must match the subgroup generators");
  return {[fwd](const ReducedWord& g) { return substitute(g, fwd); },
          [bwd](const ReducedWord& g) { return substitute(g, bwd); }};
}

CayleyOrderConfig cayley_config(const json& doc, AlphabetPtr alphabet) {
  CayleyOrderConfig cfg = CayleyOrderConfig::standard(alphabet);
  if (doc.contains("base_order")) {
    cfg.base_order.clear();
    for (const std::string& tok : string_list(doc, "base_order"))
      cfg.base_order.push_back(single_letter(alphabet, tok));
    cfg.validate();
  }
  return cfg;
}

GroupSystem load_free(const json& doc) {
  GroupSystem sys;
  sys.type = "free";
  sys.alphabet = Alphabet::make(string_list(doc, "generators"));
  sys.active.assign(static_cast<std::size_t>(sys.alphabet->size()), true);
  CayleyOrderConfig cfg = cayley_config(doc, sys.alphabet);
  sys.order = cayley_order(cfg);
  sys.canonical = [](const ReducedWord& g) { return g; };
  sys.subgroup_member = sys.order.in_subgroup;
  sys.traced_compare = [cfg](const ReducedWord& u, const ReducedWord& v,
                             SignTrace& tr) {
    return cayley_compare(cfg, u, v, &tr);
  };
  return sys;
}

GroupSystem load_free_factor(const json& doc) {
  GroupSystem sys;
  sys.type = "free-factor";
  sys.alphabet = Alphabet::make(string_list(doc, "generators"));
  sys.active.assign(static_cast<std::size_t>(sys.alphabet->size()), true);
  std::vector<bool> factor = mask_of(sys.alphabet, string_list(doc, "factor"));
  FreeFactorSpec spec = FreeFactorSpec::standard(sys.alphabet, factor);
  sys.order = free_group_order_via_factor(spec);
  sys.canonical = [](const ReducedWord& g) { return g; };
  sys.subgroup_member = [factor](const ReducedWord& g) {
    return uses_only(g, factor);
  };
  auto composed = sys.order.compare;
  sys.traced_compare = [spec, composed](const ReducedWord& u,
                                        const ReducedWord& v, SignTrace& tr) {
    free_factor_compare(spec, u, v, &tr);  // top-level tree breakdown
    return composed(u, v);
  };
  return sys;
}

GroupSystem load_amalgam(const json& doc) {
  if (!doc.contains("left") || !doc.contains("right") || !doc.contains("edge"))
    throw config_error("amalgam spec needs \"left\", \"right\" and \"edge\"");
  std::vector<std::string> left = string_list(doc.at("left"), "generators");
  std::vector<std::string> right = string_list(doc.at("right"), "generators");
  std::vector<std::string> all = left;
  all.insert(all.end(), right.begin(), right.end());

  GroupSystem sys;
  sys.type = "amalgam";
  sys.alphabet = Alphabet::make(all);  // rejects overlaps
  sys.active.assign(static_cast<std::size_t>(sys.alphabet->size()), true);

  AmalgamSpec spec;
  spec.alphabet = sys.alphabet;
  std::vector<bool> left_mask = mask_of(sys.alphabet, left);
  for (bool b : left_mask) spec.side_of.push_back(b ? Side::A : Side::B);
  std::vector<bool> right_mask;
  for (bool b : left_mask) right_mask.push_back(!b);

  const json& edge = doc.at("edge");
  std::vector<bool> c_a = mask_of(sys.alphabet, string_list(edge, "left_gens"));
  std::vector<bool> c_b =
      mask_of(sys.alphabet, string_list(edge, "right_gens"));
  EdgeIdentification ident =
      edge_identification(sys.alphabet, edge.at("map"), c_a, c_b);
  spec.a = free_vertex_engine(sys.alphabet, left_mask, c_a);
  spec.b = free_vertex_engine(sys.alphabet, right_mask, c_b);
  spec.to_b = ident.forward;
  spec.to_a = ident.backward;

  sys.order = left_order_on_amalgam(spec);
  sys.canonical = [spec](const ReducedWord& g) {
    return amalgam_canonical(spec, g);
  };
  sys.subgroup_member = [spec](const ReducedWord& g) {
    return amalgam_in_vertex(spec, Side::A, g);
  };
  sys.traced_compare = [spec](const ReducedWord& u, const ReducedWord& v,
                              SignTrace& tr) {
    return amalgam_vertex_compare(spec, u, v, &tr);
  };
  return sys;
}

GroupSystem load_hnn(const json& doc) {
  if (!doc.contains("vertex") || !doc.contains("stable"))
    throw config_error("hnn spec needs \"vertex\" and \"stable\"");
  std::vector<std::string> vertex_gens =
      string_list(doc.at("vertex"), "generators");
  std::string stable = doc.at("stable").get<std::string>();
  std::vector<std::string> all = vertex_gens;
  all.push_back(stable);

  GroupSystem sys;
  sys.type = "hnn";
  sys.alphabet = Alphabet::make(all);
  sys.active.assign(static_cast<std::size_t>(sys.alphabet->size()), true);

  std::vector<bool> vertex_mask = mask_of(sys.alphabet, vertex_gens);
  std::vector<bool> c_mask = mask_of(sys.alphabet, string_list(doc, "C"));
  std::vector<bool> d_mask = mask_of(sys.alphabet, string_list(doc, "D"));
  EdgeIdentification ident =
      edge_identification(sys.alphabet, doc.at("map"), c_mask, d_mask);

  VertexGroupEngine c_engine =
      free_vertex_engine(sys.alphabet, vertex_mask, c_mask);
  VertexGroupEngine d_engine =
      free_vertex_engine(sys.alphabet, vertex_mask, d_mask);

  HnnSpec spec;
  spec.alphabet = sys.alphabet;
  spec.stable = sys.alphabet->index(stable);
  spec.vertex_mask = vertex_mask;
  spec.identity = ReducedWord::identity(sys.alphabet);
  spec.mul_a = c_engine.mul;
  spec.inv_a = c_engine.inv;
  spec.canonical_a = c_engine.canonical;
  spec.c = {c_engine.c_member, c_engine.transversal, c_engine.relative_order};
  spec.d = {d_engine.c_member, d_engine.transversal, d_engine.relative_order};
  spec.edge_map = ident.forward;
  spec.edge_map_inv = ident.backward;
  spec.vertex_full_order = c_engine.full_order;
  if (doc.contains("iota_below_tau"))
    spec.iota_below_tau = doc.at("iota_below_tau").get<bool>();

  sys.order = left_order_on_hnn(spec);
  sys.canonical = [spec](const ReducedWord& g) {
    return hnn_canonical(spec, g);
  };
  sys.subgroup_member = [spec](const ReducedWord& g) {
    return hnn_in_vertex(spec, g);
  };
  sys.traced_compare = [spec](const ReducedWord& u, const ReducedWord& v,
                              SignTrace& tr) {
    return hnn_vertex_compare(spec, u, v, &tr);
  };
  return sys;
}

GroupSystem load_surface(const json& doc) {
  std::string y = doc.at("y").get<std::string>();
  std::string stable =
      doc.contains("stable") ? doc.at("stable").get<std::string>() : "x";
  int eps = doc.at("epsilon").get<int>();
  std::vector<std::string> all{stable, y};
  for (const std::string& z : string_list(doc, "z")) all.push_back(z);

  GroupSystem sys;
  sys.type = "surface";
  sys.alphabet = Alphabet::make(all);
  sys.active.assign(static_cast<std::size_t>(sys.alphabet->size()), true);

  ReducedWord w = parse_word(doc.at("w").get<std::string>(), sys.alphabet);
  HnnSpec spec = surface_hnn_spec(sys.alphabet, sys.alphabet->index(stable),
                                  sys.alphabet->index(y), eps, w);
  sys.order = left_order_on_hnn(spec);
  sys.canonical = [spec](const ReducedWord& g) {
    return hnn_canonical(spec, g);
  };
  sys.subgroup_member = [spec](const ReducedWord& g) {
    return hnn_in_vertex(spec, g);
  };
  sys.traced_compare = [spec](const ReducedWord& u, const ReducedWord& v,
                              SignTrace& tr) {
    return hnn_vertex_compare(spec, u, v, &tr);
  };
  return sys;
}

GroupSystem load_raag(const json& doc) {
  GroupSystem sys;
  sys.type = "raag";
  sys.alphabet = Alphabet::make(string_list(doc, "generators"));
  sys.active.assign(static_cast<std::size_t>(sys.alphabet->size()), true);

  std::vector<std::pair<std::string, std::string>> pairs;
  if (doc.contains("commuting")) {
    for (const auto& p : doc.at("commuting")) {
      if (!p.is_array() || p.size() != 2)
        throw config_error("\"commuting\" entries must be pairs");
      pairs.emplace_back(p.at(0).get<std::string>(),
                         p.at(1).get<std::string>());
    }
  }
  RaagSpec spec = RaagSpec::make(sys.alphabet, pairs);

  if (doc.contains("parabolic")) {
    std::vector<bool> y = mask_of(sys.alphabet, string_list(doc, "parabolic"));
    sys.order = raag_parabolic_order(spec, y);
    sys.subgroup_member = [spec, y](const ReducedWord& g) {
      return raag_parabolic_member(spec, y, g);
    };
  } else {
    sys.order = raag_left_order(spec);
    sys.subgroup_member = sys.order.in_subgroup;
  }
  sys.canonical = [spec](const ReducedWord& g) {
    return raag_normal_form(spec, g);
  };
  return sys;
}

GroupSystem load_burns_hale(const json& doc) {
  GroupSystem sys;
  sys.type = "burns-hale";
  sys.alphabet = Alphabet::make(string_list(doc, "generators"));
  sys.active.assign(static_cast<std::size_t>(sys.alphabet->size()), true);

  ReducedWord c_root =
      parse_word(doc.at("C_root").get<std::string>(), sys.alphabet);
  std::vector<ReducedWord> x;
  for (const std::string& s : string_list(doc, "X"))
    x.push_back(parse_word(s, sys.alphabet));

  LocalCosetOrder lco = local_coset_order(c_root, x);
  sys.order = lco.space;
  sys.universe = lco.universe;
  sys.canonical = [](const ReducedWord& g) { return g; };
  sys.subgroup_member = sys.order.in_subgroup;
  return sys;
}

}  // namespace

GroupSystem load_group_system(const json& doc) {
  if (!doc.is_object() || !doc.contains("type") || !doc.at("type").is_string())
    throw config_error("spec must be a JSON object with a \"type\" string");
  std::string type = doc.at("type").get<std::string>();
  try {
    if (type == "free") return load_free(doc);
    if (type == "free-factor") return load_free_factor(doc);
    if (type == "amalgam") return load_amalgam(doc);
    if (type == "hnn") return load_hnn(doc);
    if (type == "surface") return load_surface(doc);
    if (type == "raag") return load_raag(doc);
    if (type == "burns-hale") return load_burns_hale(doc);
  } catch (const json::exception& e) {
    throw config_error(std::string("malformed spec: ") + e.what());
  }
  throw config_error("unknown spec type \"" + type + "\"");
}

GroupSystem load_group_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open spec file " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw config_error(std::string("invalid JSON: ") + e.what());
  }
  return load_group_system(doc);
}

std::vector<ReducedWord> enumerate_ball(const GroupSystem& sys, int radius) {
  std::vector<ReducedWord> out{sys.canonical(
      ReducedWord::identity(sys.alphabet))};
  std::set<std::string> seen{format_word(out.front())};
  std::size_t level_begin = 0;
  for (int r = 0; r < radius; ++r) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (int gen = 0; gen < sys.alphabet->size(); ++gen) {
        if (!sys.active[static_cast<std::size_t>(gen)]) continue;
        for (int exp : {1, -1}) {
          std::vector<Letter> l{{gen, exp}};
          ReducedWord next = sys.canonical(
              multiply(out[i], ReducedWord::reduce(sys.alphabet, l)));
          if (seen.insert(format_word(next)).second) out.push_back(next);
        }
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace cosetorder
