#ifndef OPDC_JSON_IO_HPP
#define OPDC_JSON_IO_HPP

#include <json.hpp>

#include <string>
#include <vector>

#include "opdc/cmv.hpp"
#include "opdc/dressing.hpp"
#include "opdc/families.hpp"
#include "opdc/reflection.hpp"
#include "opdc/transforms.hpp"
#include "opdc/verify_suites.hpp"

namespace opdc::io {

// ordered_json keeps key order stable, which the CLI's byte-determinism
// guarantee relies on
using json = nlohmann::ordered_json;

std::string format_double(double v); // 17 significant digits

json rationals_to_json(const std::vector<Rational>& values);
std::vector<Rational> rationals_from_json(const json& j);
std::vector<Rational> parse_rational_list(const std::string& comma_separated);

json to_json(const ThreeTermRecurrence& rec);
json to_json(const PencilRecurrence& rec);
json to_json(const TridiagonalMatrix& t);
json dense_to_json(const Eigen::MatrixXd& m);
json to_json(const SzegoPair& pair);
json to_json(const Classification& c);
json to_json(const BISeed& seed);
json to_json(const IdentityCheck& check);
json to_json(const IdentityReport& report);
json to_json(const SuiteResult& result);
json to_json(const ChainStepReport& report);
json to_json(const QuadAlgebraReport& report);

/// {"a": [...], "generator": null | {"family": ..., "params": {...}}}
json reflection_to_json(const ReflectionSequence& seq, int prefix_len);
ReflectionSequence reflection_from_json(const json& j);

/// One eigenvalue per line, ascending.
std::string csv_spectrum(const std::vector<double>& eigenvalues);

} // namespace opdc::io

#endif
