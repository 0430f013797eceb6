#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "halg/complex.hpp"
#include "halg/shuffle.hpp"
#include "halg/simplicial.hpp"

namespace halg::io {

using Json = nlohmann::ordered_json;

// Parsers raise SchemaError (with the JSON path of the bad field) for
// malformed input and the library's domain errors for well-formed input
// that violates a mathematical precondition. `ring` overrides or, when the
// document names its own ring, must agree with it (RingError otherwise).

Json scalar_to_json(const Scalar& v);
Scalar scalar_from_json(const Json& j, const Ring& ring, const std::string& path);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const Ring& ring, const std::string& path);

Json to_json(const MonotoneMap& f);
MonotoneMap monotone_map_from_json(const Json& j, const std::string& path);

Json to_json(const HomologyGroup& h);
Json to_json(const std::vector<HomologyGroup>& hs);

Json to_json(const ConnComplex& x);
ConnComplex complex_from_json(const Json& j, const std::string& path, const std::optional<Ring>& ring = {});

Json to_json(const ChainMap& f);
ChainMap chain_map_from_json(const Json& j, const std::string& path, const std::optional<Ring>& ring = {});

Json to_json(const SimplicialModule& m);
SimplicialModule simplicial_module_from_json(const Json& j, const std::string& path,
                                             const std::optional<Ring>& ring = {});

Json to_json(const FinPoset& p);
FinPoset poset_from_json(const Json& j, const std::string& path);

Json to_json(const ShuffleComplex& s);
Json to_json(const EmbeddedComplex& e);
Json to_json(const ModelClass& c);
Json to_json(const RlpReport& r);
Json dk_blocks_json(const ConnComplex& x, std::size_t horizon);

}  // namespace halg::io
