#include "halg/json_io.hpp"

#include <limits>

namespace halg::io {

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "." + key; }
std::string at(const std::string& path, std::size_t idx) { return path + "[" + std::to_string(idx) + "]"; }

const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(at(path, key), "missing field");
  return *it;
}

std::size_t natural(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    throw SchemaError(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  return j;
}

Ring resolve_ring(const Json& j, const std::string& path, const std::optional<Ring>& hint) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  auto it = j.find("ring");
  if (it == j.end()) {
    if (hint) return *hint;
    throw SchemaError(at(path, "ring"), "missing field (or pass --ring)");
  }
  if (!it->is_string()) throw SchemaError(at(path, "ring"), "expected a ring tag string");
  Ring r;
  try {
    r = Ring::parse(it->get<std::string>());
  } catch (const InvalidRing& e) {
    throw SchemaError(at(path, "ring"), e.what());
  }
  if (hint && !(*hint == r)) {
    RingError e("document ring " + r.tag() + " does not match requested ring " + hint->tag());
    e.set_path(at(path, "ring"));
    throw e;
  }
  return r;
}

// Degree-keyed object {"1": M1, ...}; absent keys default to nothing.
std::optional<Json> degree_entry(const Json& obj, std::size_t n) {
  auto it = obj.find(std::to_string(n));
  if (it == obj.end()) return std::nullopt;
  return *it;
}

void check_degree_keys(const Json& obj, const std::string& path, std::size_t lo, std::size_t hi) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object keyed by degree");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const std::string& k = it.key();
    bool digits = !k.empty() && k.find_first_not_of("0123456789") == std::string::npos;
    if (!digits || std::stoull(k) < lo || std::stoull(k) > hi)
      throw SchemaError(at(path, k), "degree key out of range " + std::to_string(lo) + ".." + std::to_string(hi));
  }
}

// Attaches `path` to any library error raised while building a value.
template <class F>
auto located(const std::string& path, F&& build) {
  try {
    return build();
  } catch (Error& e) {
    e.set_path(path);
    throw;
  }
}

}  // namespace

Json scalar_to_json(const Scalar& v) {
  if (v.get_den() == 1 && v.get_num().fits_slong_p()) return v.get_num().get_si();
  return v.get_str();
}

Scalar scalar_from_json(const Json& j, const Ring& ring, const std::string& path) {
  try {
    if (j.is_number_integer()) return ring.reduce(Scalar(static_cast<long>(j.get<long long>())));
    if (j.is_number_unsigned()) return ring.parse_scalar(std::to_string(j.get<unsigned long long>()));
    if (j.is_string()) return ring.parse_scalar(j.get<std::string>());
  } catch (const DomainError& e) {
    throw SchemaError(path, std::string(e.what()) + " in ring " + ring.tag());
  }
  throw SchemaError(path, "expected an exact scalar (integer or \"a/b\" string)");
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(i, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j, const Ring& ring, const std::string& path) {
  std::size_t r = natural(field(j, "rows", path), at(path, "rows"));
  std::size_t c = natural(field(j, "cols", path), at(path, "cols"));
  const Json& e = array(field(j, "entries", path), at(path, "entries"));
  if (e.size() != r) throw SchemaError(at(path, "entries"), "expected " + std::to_string(r) + " rows");
  Matrix m(ring, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const Json& row = array(e[i], at(at(path, "entries"), i));
    if (row.size() != c) throw SchemaError(at(at(path, "entries"), i), "expected " + std::to_string(c) + " entries");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = scalar_from_json(row[k], ring, at(at(at(path, "entries"), i), k));
  }
  return m;
}

Json to_json(const MonotoneMap& f) {
  return Json{{"source", f.source_top()}, {"target", f.target_top()}, {"values", f.values()}};
}

MonotoneMap monotone_map_from_json(const Json& j, const std::string& path) {
  std::size_t n = natural(field(j, "source", path), at(path, "source"));
  std::size_t m = natural(field(j, "target", path), at(path, "target"));
  const Json& v = array(field(j, "values", path), at(path, "values"));
  std::vector<std::size_t> values;
  for (std::size_t i = 0; i < v.size(); ++i) values.push_back(natural(v[i], at(at(path, "values"), i)));
  try {
    return MonotoneMap(n, m, std::move(values));
  } catch (const DomainError& e) {
    throw SchemaError(at(path, "values"), e.what());
  }
}

Json to_json(const HomologyGroup& h) {
  Json j{{"rank", h.free_rank}};
  if (!h.torsion.empty()) {
    Json t = Json::array();
    for (const auto& d : h.torsion) t.push_back(scalar_to_json(Scalar(d)));
    j["torsion"] = std::move(t);
  }
  return j;
}

Json to_json(const std::vector<HomologyGroup>& hs) {
  Json a = Json::array();
  for (const auto& h : hs) a.push_back(to_json(h));
  return a;
}

Json to_json(const ConnComplex& x) {
  Json diffs = Json::object();
  for (std::size_t n = 1; n <= x.top(); ++n) diffs[std::to_string(n)] = to_json(x.diff(n));
  return Json{{"ring", x.ring().tag()}, {"top", x.top()}, {"ranks", x.ranks()}, {"diffs", std::move(diffs)}};
}

ConnComplex complex_from_json(const Json& j, const std::string& path, const std::optional<Ring>& hint) {
  Ring ring = resolve_ring(j, path, hint);
  std::size_t top = natural(field(j, "top", path), at(path, "top"));
  const Json& rj = array(field(j, "ranks", path), at(path, "ranks"));
  if (rj.size() != top + 1) throw SchemaError(at(path, "ranks"), "expected top+1 = " + std::to_string(top + 1) + " ranks");
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < rj.size(); ++i) ranks.push_back(natural(rj[i], at(at(path, "ranks"), i)));
  std::vector<Matrix> diffs;
  auto it = j.find("diffs");
  Json dj = it == j.end() ? Json::object() : *it;
  check_degree_keys(dj, at(path, "diffs"), 1, std::max<std::size_t>(top, 1));
  for (std::size_t n = 1; n <= top; ++n) {
    std::string p = at(at(path, "diffs"), std::to_string(n));
    if (auto e = degree_entry(dj, n)) {
      Matrix m = matrix_from_json(*e, ring, p);
      if (m.rows() != ranks[n - 1] || m.cols() != ranks[n])
        throw SchemaError(p, "expected shape " + std::to_string(ranks[n - 1]) + "x" + std::to_string(ranks[n]));
      diffs.push_back(std::move(m));
    } else {
      diffs.emplace_back(ring, ranks[n - 1], ranks[n]);
    }
  }
  return located(path, [&] { return ConnComplex(ring, std::move(ranks), std::move(diffs)); });
}

Json to_json(const ChainMap& f) {
  Json comps = Json::object();
  for (std::size_t n = 0; n <= f.top(); ++n) comps[std::to_string(n)] = to_json(f.component(n));
  return Json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"components", std::move(comps)}};
}

ChainMap chain_map_from_json(const Json& j, const std::string& path, const std::optional<Ring>& hint) {
  ConnComplex src = complex_from_json(field(j, "source", path), at(path, "source"), hint);
  ConnComplex dst = complex_from_json(field(j, "target", path), at(path, "target"), hint);
  if (!(src.ring() == dst.ring())) {
    RingError e("source and target rings differ");
    e.set_path(at(at(path, "target"), "ring"));
    throw e;
  }
  std::size_t top = std::max(src.top(), dst.top());
  auto it = j.find("components");
  Json cj = it == j.end() ? Json::object() : *it;
  check_degree_keys(cj, at(path, "components"), 0, top);
  std::vector<Matrix> comps;
  for (std::size_t n = 0; n <= top; ++n) {
    std::string p = at(at(path, "components"), std::to_string(n));
    if (auto e = degree_entry(cj, n)) {
      Matrix m = matrix_from_json(*e, src.ring(), p);
      if (m.rows() != dst.rank(n) || m.cols() != src.rank(n))
        throw SchemaError(p, "expected shape " + std::to_string(dst.rank(n)) + "x" + std::to_string(src.rank(n)));
      comps.push_back(std::move(m));
    } else {
      comps.emplace_back(src.ring(), dst.rank(n), src.rank(n));
    }
  }
  return located(path, [&] { return ChainMap(std::move(src), std::move(dst), std::move(comps)); });
}

Json to_json(const SimplicialModule& m) {
  Json faces = Json::object(), degens = Json::object();
  for (std::size_t n = 1; n <= m.horizon(); ++n) {
    Json level = Json::array();
    for (std::size_t i = 0; i <= n; ++i) level.push_back(to_json(m.face(n, i)));
    faces[std::to_string(n)] = std::move(level);
  }
  for (std::size_t n = 0; n < m.horizon(); ++n) {
    Json level = Json::array();
    for (std::size_t i = 0; i <= n; ++i) level.push_back(to_json(m.degen(n, i)));
    degens[std::to_string(n)] = std::move(level);
  }
  return Json{{"ring", m.ring().tag()},
              {"horizon", m.horizon()},
              {"ranks", m.ranks()},
              {"faces", std::move(faces)},
              {"degens", std::move(degens)}};
}

SimplicialModule simplicial_module_from_json(const Json& j, const std::string& path, const std::optional<Ring>& hint) {
  Ring ring = resolve_ring(j, path, hint);
  std::size_t h = natural(field(j, "horizon", path), at(path, "horizon"));
  const Json& rj = array(field(j, "ranks", path), at(path, "ranks"));
  if (rj.size() != h + 1) throw SchemaError(at(path, "ranks"), "expected horizon+1 ranks");
  std::vector<std::size_t> ranks;
  for (std::size_t i = 0; i < rj.size(); ++i) ranks.push_back(natural(rj[i], at(at(path, "ranks"), i)));
  auto read_family = [&](const char* name, std::size_t lo, std::size_t hi, bool is_face) {
    const Json& obj = field(j, name, path);
    std::string fp = at(path, name);
    check_degree_keys(obj, fp, lo, std::max(hi, lo));
    std::vector<std::vector<Matrix>> out(is_face ? h + 1 : h);
    for (std::size_t n = lo; n <= hi && hi >= lo; ++n) {
      std::string lp = at(fp, std::to_string(n));
      auto e = degree_entry(obj, n);
      if (!e) throw SchemaError(lp, "missing level");
      const Json& level = array(*e, lp);
      if (level.size() != n + 1) throw SchemaError(lp, "expected " + std::to_string(n + 1) + " matrices");
      for (std::size_t i = 0; i <= n; ++i) {
        Matrix m = matrix_from_json(level[i], ring, at(lp, i));
        std::size_t r = is_face ? ranks[n - 1] : ranks[n + 1];
        if (m.rows() != r || m.cols() != ranks[n])
          throw SchemaError(at(lp, i), "expected shape " + std::to_string(r) + "x" + std::to_string(ranks[n]));
        out[n].push_back(std::move(m));
      }
    }
    return out;
  };
  auto faces = read_family("faces", 1, h, true);
  auto degens = h ? read_family("degens", 0, h - 1, false) : std::vector<std::vector<Matrix>>{};
  return located(path, [&] { return SimplicialModule(ring, h, std::move(ranks), std::move(faces), std::move(degens)); });
}

Json to_json(const FinPoset& p) { return Json{{"elements", p.elements()}, {"leq", p.relation()}}; }

FinPoset poset_from_json(const Json& j, const std::string& path) {
  const Json& ej = array(field(j, "elements", path), at(path, "elements"));
  std::vector<std::string> elements;
  for (std::size_t i = 0; i < ej.size(); ++i) {
    if (ej[i].is_string())
      elements.push_back(ej[i].get<std::string>());
    else if (ej[i].is_number_integer())
      elements.push_back(std::to_string(ej[i].get<long long>()));
    else
      throw SchemaError(at(at(path, "elements"), i), "expected a string or integer label");
  }
  const Json& lj = array(field(j, "leq", path), at(path, "leq"));
  std::vector<std::vector<bool>> leq;
  for (std::size_t a = 0; a < lj.size(); ++a) {
    const Json& row = array(lj[a], at(at(path, "leq"), a));
    std::vector<bool> r;
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (!row[b].is_boolean()) throw SchemaError(at(at(at(path, "leq"), a), b), "expected a boolean");
      r.push_back(row[b].get<bool>());
    }
    leq.push_back(std::move(r));
  }
  if (leq.size() != elements.size()) throw SchemaError(at(path, "leq"), "expected one row per element");
  for (std::size_t a = 0; a < leq.size(); ++a)
    if (leq[a].size() != elements.size()) throw SchemaError(at(at(path, "leq"), a), "expected one entry per element");
  return located(path, [&] { return FinPoset(std::move(elements), std::move(leq)); });
}

Json to_json(const ShuffleComplex& s) {
  Json j = to_json(s.underlying);
  Json blocks = Json::array();
  for (const auto& level : s.blocks) {
    Json l = Json::array();
    for (const auto& b : level)
      l.push_back(Json{{"f", b.pair.f.values()}, {"g", b.pair.g.values()}, {"k", b.k()}, {"l", b.l()}, {"offset", b.offset}});
    blocks.push_back(std::move(l));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

Json to_json(const EmbeddedComplex& e) {
  Json emb = Json::object();
  for (std::size_t n = 0; n < e.embedding.size(); ++n) emb[std::to_string(n)] = to_json(e.embedding[n]);
  return Json{{"complex", to_json(e.complex)}, {"embedding", std::move(emb)}};
}

Json to_json(const ModelClass& c) {
  return Json{{"fibration", c.fibration}, {"cofibration", c.cofibration}, {"weak_equivalence", c.weak_equivalence}};
}

Json to_json(const RlpReport& r) {
  Json gens = Json::array();
  for (const auto& c : r.checks)
    gens.push_back(Json{{"name", c.name}, {"family", std::string(1, c.family)}, {"n", c.n}, {"pass", c.pass}});
  return Json{{"generators", std::move(gens)}, {"all_x_pass", r.all_x_pass()}, {"all_y_pass", r.all_y_pass()}};
}

Json dk_blocks_json(const ConnComplex& x, std::size_t horizon) {
  Json levels = Json::array();
  for (std::size_t n = 0; n <= horizon; ++n) {
    Json l = Json::array();
    for (const auto& b : dk_blocks(x, n))
      l.push_back(Json{{"surjection", b.surjection.values()}, {"k", b.surjection.target_top()}, {"offset", b.offset}});
    levels.push_back(std::move(l));
  }
  return levels;
}

}  // namespace halg::io
