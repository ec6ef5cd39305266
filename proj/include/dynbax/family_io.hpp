#pragma once

// JSON files for user-supplied operator families:
//
//   {"graph": [[u, v], ...], "order": 2,
//    "blocks": [{"base": a, "in": [a, b, c], "out": [a, d, c], "re": x, "im": y}],
//    "kappa" | "qbar" | "nubar": [{"vertex": a, "re": x, "im": y}]}
//
// A file with kappa holds T blocks, one with qbar only holds Hecke S blocks,
// and one with qbar and nubar holds BMW U blocks.

#include <optional>
#include <string>
#include <vector>

#include "dynbax/operators.hpp"

namespace dynbax {

enum class FamilyFileKind { TL, Hecke, BMW };

std::string family_file_kind_name(FamilyFileKind k);

struct FamilyFileBlock {
  Vertex base = 0;
  std::vector<Vertex> in;
  std::vector<Vertex> out;
  Complex value;
};

struct FamilyFile {
  Graph graph;
  int order = 2;
  std::vector<FamilyFileBlock> blocks;
  std::optional<ScalarMap> kappa;
  std::optional<ScalarMap> qbar;
  std::optional<ScalarMap> nubar;

  FamilyFileKind kind() const;
};

/// Throws InputError on malformed JSON, missing fields, order != 2 or
/// scalar maps that do not name every vertex.
FamilyFile parse_family_file(const std::string& text);
FamilyFile read_family_file(const std::string& path);

/// Every vertex is treated as complete. ShapeError for blocks that leave
/// the fiber or break degree preservation; InputError for the wrong kind.
TLFamily tl_from_file(const FamilyFile& f, std::string name = "file");
HeckeFamily hecke_from_file(const FamilyFile& f, std::string name = "file");
BMWFamily bmw_from_file(const FamilyFile& f, std::string name = "file");

std::string family_to_json(const TLFamily& f);
std::string family_to_json(const HeckeFamily& f);
std::string family_to_json(const BMWFamily& f);

}  // namespace dynbax
