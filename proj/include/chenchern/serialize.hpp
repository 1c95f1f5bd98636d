#ifndef CHENCHERN_SERIALIZE_HPP
#define CHENCHERN_SERIALIZE_HPP

/// Canonical JSON encoding of the exact objects. Objects are emitted with
/// sorted keys and terms in their canonical order, so equal values give
/// equal bytes. The grammar is documented in docs/FORMATS.md.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "chenchern/chain.hpp"
#include "chenchern/chen_integral.hpp"
#include "chenchern/unitary.hpp"

namespace chenchern::io {

using Json = nlohmann::json;

/// Malformed input; the message names the offending location.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& where = "rational");

/// {"<tau power>": [num_re, den_re, num_im, den_im], ...}
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const std::string& where = "scalar");

Json to_json(const Frame& f);
FramePtr frame_from_json(const Json& j, const std::string& where = "frame");

Json to_json(const Form& w);
Form form_from_json(const Json& j, const std::string& where = "form");

Json to_json(const Chain& w);
Chain chain_from_json(const Json& j, const std::string& where = "chain");

Json to_json(const Plot& p);
Plot plot_from_json(const Json& j, const std::string& where = "plot");

Json to_json(const UnitaryMap& g);
UnitaryMap map_from_json(const Json& j, const std::string& where = "map");

/// A shipped corpus name, a path to a JSON map file, or inline JSON.
UnitaryMap parse_map_spec(const std::string& spec);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);
Json parse_text(const std::string& text, const std::string& where);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

}  // namespace chenchern::io

#endif  // CHENCHERN_SERIALIZE_HPP
