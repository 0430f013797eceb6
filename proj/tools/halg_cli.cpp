// halg: JSON front end to the library. One verb per invocation; results go
// to stdout as JSON (or a table with --pretty). Exit 0 on success, 1 on a
// domain error, 2 on malformed input.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "halg/json_io.hpp"

using namespace halg;
using io::Json;

namespace {

struct Malformed {
  std::string path, message;
};

Json read_json(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Malformed{"$", "cannot read " + file};
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Malformed{"$", e.what()};
  }
}

void write_json(const std::filesystem::path& p, const Json& j) {
  std::ofstream out(p);
  if (!out) throw DomainError("cannot write " + p.string());
  out << j.dump(2) << '\n';
}

std::string group_name(const Json& h, const std::string& ring) {
  std::size_t r = h["rank"].get<std::size_t>();
  std::string s = r == 0 ? "" : (r == 1 ? ring : ring + "^" + std::to_string(r));
  if (h.contains("torsion"))
    for (const auto& t : h["torsion"]) {
      if (!s.empty()) s += " + ";
      s += ring + "/" + (t.is_string() ? t.get<std::string>() : std::to_string(t.get<long long>()));
    }
  return s.empty() ? "0" : s;
}

std::string matrix_text(const Json& m, const std::string& indent) {
  std::ostringstream os;
  std::size_t rows = m["rows"], cols = m["cols"];
  if (rows == 0 || cols == 0) {
    os << indent << "(" << rows << "x" << cols << ")\n";
    return os.str();
  }
  std::vector<std::vector<std::string>> cells;
  std::size_t width = 1;
  for (const auto& row : m["entries"]) {
    auto& out = cells.emplace_back();
    for (const auto& e : row) {
      out.push_back(e.is_string() ? e.get<std::string>() : e.dump());
      width = std::max(width, out.back().size());
    }
  }
  for (const auto& row : cells) {
    os << indent << "[";
    for (std::size_t c = 0; c < row.size(); ++c)
      os << (c ? " " : "") << std::string(width - row[c].size(), ' ') << row[c];
    os << "]\n";
  }
  return os.str();
}

std::string complex_text(const Json& x) {
  std::ostringstream os;
  os << "ring " << x["ring"].get<std::string>() << ", ranks";
  for (const auto& r : x["ranks"]) os << " " << r;
  os << "\n";
  for (const auto& [n, d] : x["diffs"].items()) os << "d" << n << ":\n" << matrix_text(d, "  ");
  return os.str();
}

std::string map_text(const Json& f) {
  std::ostringstream os;
  os << "source: " << complex_text(f["source"]) << "target: " << complex_text(f["target"]);
  for (const auto& [n, m] : f["components"].items()) os << "f" << n << ":\n" << matrix_text(m, "  ");
  return os.str();
}

std::string yes(const Json& b) { return b.get<bool>() ? "yes" : "no"; }

// Table view of a verb's JSON result.
std::string pretty(const std::string& verb, const Json& r, const std::string& ring_name) {
  std::ostringstream os;
  if (verb == "homology" || verb == "nerve-homology") {
    for (std::size_t n = 0; n < r["H"].size(); ++n) os << "H" << n << " = " << group_name(r["H"][n], ring_name) << "\n";
  } else if (verb == "classify") {
    for (const char* k : {"fibration", "cofibration", "weak_equivalence", "trivial_fibration", "trivial_cofibration"})
      if (r.contains(k)) os << k << ": " << yes(r[k]) << "\n";
    if (r.contains("rlp")) {
      for (const auto& g : r["rlp"]["generators"])
        os << "  rlp " << g["name"].get<std::string>() << ": " << (g["pass"].get<bool>() ? "pass" : "fail") << "\n";
    }
  } else if (verb == "factor") {
    os << "kappa\n" << map_text(r["kappa"]) << "eta\n" << map_text(r["eta"]);
  } else if (verb == "lift") {
    os << map_text(r["lift"]);
  } else if (verb == "compose") {
    os << map_text(r);
  } else if (verb == "dk") {
    os << "ring " << r["ring"].get<std::string>() << ", ranks";
    for (const auto& x : r["ranks"]) os << " " << x;
    os << "\n";
    for (std::size_t n = 0; n < r["blocks"].size(); ++n) {
      os << "level " << n << ":";
      for (const auto& b : r["blocks"][n]) {
        os << " [";
        for (const auto& v : b["surjection"]) os << v;
        os << "]";
      }
      os << "\n";
    }
  } else if (verb == "nor") {
    os << complex_text(r["complex"]);
  } else if (verb == "shuffle") {
    os << complex_text(r);
  } else if (verb == "ez-check") {
    for (const char* k : {"d_squared_zero", "chain_map", "cone_exact", "homology_match"}) os << k << ": " << yes(r[k]) << "\n";
  } else if (verb == "check-identities") {
    os << (r["ok"].get<bool>() ? "all simplicial identities hold" : "violations:") << "\n";
    for (const auto& v : r["violations"]) os << "  " << v["description"].get<std::string>() << "\n";
  } else {
    os << r.dump(2) << "\n";
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact homological algebra over Z, Q and F_p"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty_out = false;
  std::string ring_tag;
  app.add_flag("--pretty", pretty_out, "Human-readable table instead of JSON");
  app.add_option("--ring", ring_tag, "Coefficient ring Z, Q or F<p> used when the input has none; otherwise must match");

  std::string in1, in2, kind, out_dir;
  std::size_t horizon = 4, max_n = 0;
  bool certify = false;

  auto* homology_cmd = app.add_subcommand("homology", "Homology of a complex");
  homology_cmd->add_option("complex", in1)->required();

  auto* classify_cmd = app.add_subcommand("classify", "Model-structure class of a chain map");
  classify_cmd->add_option("map", in1)->required();
  classify_cmd->add_flag("--certify", certify, "Also run the generator lifting tests");
  classify_cmd->add_option("--max-n", max_n, "Largest generator degree for --certify (default top+1)");

  auto* factor_cmd = app.add_subcommand("factor", "Factor a chain map");
  factor_cmd->add_option("map", in1)->required();
  factor_cmd->add_option("--kind", kind, "trivcof-fib or cof-trivfib")
      ->required()
      ->check(CLI::IsMember({"trivcof-fib", "cof-trivfib"}));
  factor_cmd->add_option("--out-dir", out_dir, "Also write kappa.json and eta.json here");

  auto* lift_cmd = app.add_subcommand("lift", "Diagonal of a lifting square {f, g, top, bottom}");
  lift_cmd->add_option("square", in1)->required();

  auto* compose_cmd = app.add_subcommand("compose", "Composite second∘first of two maps");
  compose_cmd->add_option("first", in1)->required();
  compose_cmd->add_option("second", in2)->required();

  auto* dk_cmd = app.add_subcommand("dk", "Dold-Kan simplicial module of a complex");
  dk_cmd->add_option("complex", in1)->required();
  dk_cmd->add_option("--horizon", horizon, "Top simplicial level");

  auto* nor_cmd = app.add_subcommand("nor", "Normalized complex of a simplicial module");
  nor_cmd->add_option("module", in1)->required();

  auto* shuffle_cmd = app.add_subcommand("shuffle", "Shuffle product of two complexes");
  shuffle_cmd->add_option("x", in1)->required();
  shuffle_cmd->add_option("y", in2)->required();

  auto* ez_cmd = app.add_subcommand("ez-check", "Check the shuffle map X⊗Y -> X⊠Y");
  ez_cmd->add_option("x", in1)->required();
  ez_cmd->add_option("y", in2)->required();

  auto* nerve_cmd = app.add_subcommand("nerve-homology", "Homology of the normalized chains of a poset's nerve");
  nerve_cmd->add_option("poset", in1)->required();
  nerve_cmd->add_option("--horizon", horizon, "Number of degrees to report");

  auto* ident_cmd = app.add_subcommand("check-identities", "Check the simplicial identities of a module");
  ident_cmd->add_option("module", in1)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cout << Json{{"error", e.what()}, {"kind", "UsageError"}, {"path", "argv"}}.dump() << '\n';
    return 2;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string verb = cmd->get_name();
  Json result;
  std::string ring_name;
  try {
    std::optional<Ring> ring;
    if (!ring_tag.empty()) {
      try {
        ring = Ring::parse(ring_tag);
      } catch (const InvalidRing& e) {
        throw Malformed{"--ring", e.what()};
      }
    }

    if (verb == "homology") {
      ConnComplex x = io::complex_from_json(read_json(in1), "$", ring);
      ring_name = x.ring().tag();
      result = Json{{"H", io::to_json(homology(x))}};
    } else if (verb == "classify") {
      ChainMap f = io::chain_map_from_json(read_json(in1), "$", ring);
      ModelClass c = classify(f);
      result = io::to_json(c);
      if (certify) {
        std::size_t n = max_n ? max_n : f.top() + 1;
        result["trivial_fibration"] = c.trivial_fibration();
        result["trivial_cofibration"] = c.trivial_cofibration();
        Json rlp = io::to_json(rlp_generator_check(f, n));
        rlp["max_n"] = n;
        result["rlp"] = std::move(rlp);
      }
    } else if (verb == "factor") {
      ChainMap f = io::chain_map_from_json(read_json(in1), "$", ring);
      Factorization fac = kind == "trivcof-fib" ? factor_trivcof_fib(f) : factor_cof_trivfib(f);
      Json k = io::to_json(fac.kappa), e = io::to_json(fac.eta);
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        write_json(std::filesystem::path(out_dir) / "kappa.json", k);
        write_json(std::filesystem::path(out_dir) / "eta.json", e);
      }
      result = Json{{"kind", kind}, {"kappa", std::move(k)}, {"eta", std::move(e)}};
    } else if (verb == "lift") {
      Json sq = read_json(in1);
      auto part = [&](const char* name) {
        if (!sq.is_object() || !sq.contains(name)) throw SchemaError(std::string("$.") + name, "missing field");
        return io::chain_map_from_json(sq[name], std::string("$.") + name, ring);
      };
      ChainMap f = part("f"), g = part("g"), top = part("top"), bottom = part("bottom");
      result = Json{{"lift", io::to_json(lift_square(f, g, top, bottom))}};
    } else if (verb == "compose") {
      ChainMap f = io::chain_map_from_json(read_json(in1), "$", ring);
      ChainMap g = io::chain_map_from_json(read_json(in2), "$", ring);
      result = io::to_json(compose(g, f));
    } else if (verb == "dk") {
      ConnComplex x = io::complex_from_json(read_json(in1), "$", ring);
      result = io::to_json(dk(x, horizon));
      result["blocks"] = io::dk_blocks_json(x, horizon);
    } else if (verb == "nor") {
      result = io::to_json(nor(io::simplicial_module_from_json(read_json(in1), "$", ring)));
    } else if (verb == "shuffle") {
      ConnComplex x = io::complex_from_json(read_json(in1), "$", ring);
      ConnComplex y = io::complex_from_json(read_json(in2), "$", ring);
      result = io::to_json(shuffle_product(x, y));
    } else if (verb == "ez-check") {
      ConnComplex x = io::complex_from_json(read_json(in1), "$", ring);
      ConnComplex y = io::complex_from_json(read_json(in2), "$", ring);
      // Building the product and the map validates ∂² = 0 and the chain-map squares.
      ChainMap nabla = ez_map(x, y);
      auto th = homology(nabla.source()), sh = homology(nabla.target());
      result = Json{{"d_squared_zero", true},
                    {"chain_map", true},
                    {"cone_exact", is_exact(mapping_cone(nabla))},
                    {"homology_match", th == sh},
                    {"tensor_homology", io::to_json(th)},
                    {"shuffle_homology", io::to_json(sh)}};
    } else if (verb == "nerve-homology") {
      FinPoset p = io::poset_from_json(read_json(in1), "$");
      Ring r = ring.value_or(Ring::integers());
      auto hs = homology(nor(free_module(nerve(p, horizon), r)).complex);
      hs.resize(horizon);
      auto least = p.least_element();
      ring_name = r.tag();
      result = Json{{"H", io::to_json(hs)},
                    {"least_element", least ? Json(p.elements()[*least]) : Json(nullptr)}};
    } else if (verb == "check-identities") {
      SimplicialModule m = io::simplicial_module_from_json(read_json(in1), "$", ring);
      Json vs = Json::array();
      for (const auto& v : check_simplicial_identities(m))
        vs.push_back(Json{{"relation", v.relation}, {"n", v.n}, {"i", v.i}, {"j", v.j}, {"description", v.describe()}});
      result = Json{{"ok", vs.empty()}, {"violations", std::move(vs)}};
    }
  } catch (const Malformed& e) {
    std::cout << Json{{"error", e.message}, {"kind", "SchemaError"}, {"path", e.path}}.dump() << '\n';
    return 2;
  } catch (const Error& e) {
    Json err{{"error", e.what()}, {"kind", e.kind()}};
    if (!e.path().empty()) err["path"] = e.path();
    std::cout << err.dump() << '\n';
    return dynamic_cast<const SchemaError*>(&e) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cout << Json{{"error", e.what()}, {"kind", "InternalError"}}.dump() << '\n';
    return 1;
  }

  if (pretty_out)
    std::cout << pretty(verb, result, ring_name);
  else
    std::cout << result.dump() << '\n';
  return 0;
}
