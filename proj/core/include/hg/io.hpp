#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hg/characters.hpp"
#include "hg/cyclotomic.hpp"
#include "hg/disk.hpp"
#include "hg/group.hpp"
#include "hg/local_action.hpp"
#include "hg/obstruction.hpp"
#include "hg/rational.hpp"
#include "hg/tree.hpp"

namespace hg::io {

using Json = nlohmann::json;

inline constexpr const char *kSchema = "hg/1";

/// Malformed input: bad JSON, missing or mistyped fields.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::filesystem::path &path);

/// Group reference: {"builder": name, ...params}, {"permutations": [[...]]}, {"elements": [[...]]},
/// {"path": file} or a bare file name. Paths resolve against base.
FiniteGroup read_group(const Json &ref, const std::filesystem::path &base = {});

Json to_json(const Rational &r);
Json to_json(const Cyclotomic &c);
/// {"conductor": N, "coeffs": [...]} over exponents 0..N-1, a string, or an integer.
Cyclotomic read_cyclotomic(const Json &j);
Rational read_rational(const Json &j);

Json class_function_json(const ClassFunction &f);
/// Values per class; with an optional "classes" list of element names giving the order.
ClassFunction read_class_function(const FiniteGroup &g, const Json &j);

struct CharacterFile {
  FiniteGroup group;
  Json group_ref;
  ClassFunction character;
};
CharacterFile read_character_file(const std::filesystem::path &path);

struct TreeFile {
  Json group_ref;
  HurwitzTree tree;
};
TreeFile read_tree_file(const std::filesystem::path &path);
TreeFile read_tree(const Json &j, const std::filesystem::path &base = {});
/// Tree in the same format as tree files (leaf classes under "leaf_monodromy").
Json tree_json(const HurwitzTree &t, const Json &group_ref);

DiskAction read_action_file(const std::filesystem::path &path);
DiskAction read_action(const Json &j, const std::filesystem::path &base = {});

/// {"field": {"p", "k"}, "group", "precision", "generators": {name: {"series": [...]} | {"translation": mu}}}
LocalAction read_local_action_file(const std::filesystem::path &path);
LocalAction read_local_action(const Json &j, const std::filesystem::path &base = {});

Json report_json(const ObstructionReport &r, const Json &group_ref, bool certificates);

}  // namespace hg::io
