#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "spohn/core.hpp"
#include "spohn/kappa.hpp"

// Input documents for the command-line front end:
//
//   {"kind": "probability", "worlds": ["w1", "w2"], "values": ["0.6", "0.4"]}
//   {"kind": "ranking",     "worlds": ["a", "b"],   "values": [0, 3]}
//
// Probability values are strings (decimal or a/b) so they parse exactly.
// Optional keys: "eps" (string), "evidence" (list of world labels), and for
// probability documents "ranks" (integers, the closeness used by imaging).
// "worlds" may be omitted, giving w1..wn.
namespace spohn::cli {

enum class DocumentKind { probability, ranking };

inline const char* to_string(DocumentKind kind) {
  return kind == DocumentKind::probability ? "probability" : "ranking";
}

struct DocumentModel {
  DocumentKind kind = DocumentKind::probability;
  std::vector<std::string> worlds;
  std::vector<std::string> values;  // decimal strings, or decimal integers for rankings
  std::optional<std::string> eps;
  std::optional<std::vector<std::string>> evidence;
  std::optional<std::vector<Rank>> ranks;
};

namespace detail {

inline Error schema_error(const std::string& path, const std::string& what) {
  return Error(Errc::parse, "at " + path + ": " + what);
}

inline std::vector<std::string> string_list(const nlohmann::json& node, const std::string& path) {
  if (!node.is_array()) throw schema_error(path, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    if (!node[i].is_string()) throw schema_error(path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(node[i].get<std::string>());
  }
  return out;
}

inline std::vector<Rank> rank_list(const nlohmann::json& node, const std::string& path) {
  if (!node.is_array()) throw schema_error(path, "expected an array of integers");
  std::vector<Rank> out;
  for (std::size_t i = 0; i < node.size(); ++i) {
    const auto& v = node[i];
    std::string at = path + "[" + std::to_string(i) + "]";
    if (v.is_number_unsigned()) {
      out.push_back(v.get<Rank>());
    } else if (v.is_number_integer()) {
      throw Error(Errc::validation, at + ": ranks must be non-negative, got " + v.dump());
    } else {
      throw schema_error(at, "expected a non-negative integer, got " + v.dump());
    }
  }
  return out;
}

}  // namespace detail

inline DocumentModel parse_document(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse, "at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!root.is_object()) throw detail::schema_error("$", "expected a JSON object");
  for (const auto& item : root.items()) {
    const auto& k = item.key();
    if (k != "kind" && k != "worlds" && k != "values" && k != "eps" && k != "evidence" && k != "ranks")
      throw detail::schema_error("$." + k, "unknown key");
  }

  DocumentModel doc;
  if (!root.contains("kind") || !root["kind"].is_string())
    throw detail::schema_error("$.kind", "expected \"probability\" or \"ranking\"");
  const auto kind = root["kind"].get<std::string>();
  if (kind == "probability") doc.kind = DocumentKind::probability;
  else if (kind == "ranking") doc.kind = DocumentKind::ranking;
  else throw detail::schema_error("$.kind", "expected \"probability\" or \"ranking\", got \"" + kind + "\"");

  if (!root.contains("values")) throw detail::schema_error("$.values", "missing");
  if (doc.kind == DocumentKind::probability) {
    doc.values = detail::string_list(root["values"], "$.values");
  } else {
    for (auto r : detail::rank_list(root["values"], "$.values")) doc.values.push_back(std::to_string(r));
  }
  if (doc.values.empty()) throw Error(Errc::validation, "a document needs at least one world");

  if (root.contains("worlds")) {
    doc.worlds = detail::string_list(root["worlds"], "$.worlds");
    if (doc.worlds.size() != doc.values.size())
      throw Error(Errc::validation, std::to_string(doc.worlds.size()) + " worlds but " +
                                        std::to_string(doc.values.size()) + " values");
  } else {
    for (std::size_t i = 1; i <= doc.values.size(); ++i) doc.worlds.push_back("w" + std::to_string(i));
  }
  if (root.contains("eps")) {
    if (!root["eps"].is_string()) throw detail::schema_error("$.eps", "expected a decimal string");
    doc.eps = root["eps"].get<std::string>();
  }
  if (root.contains("evidence")) doc.evidence = detail::string_list(root["evidence"], "$.evidence");
  if (root.contains("ranks")) {
    if (doc.kind != DocumentKind::probability)
      throw detail::schema_error("$.ranks", "only probability documents carry a closeness ranking");
    doc.ranks = detail::rank_list(root["ranks"], "$.ranks");
    if (doc.ranks->size() != doc.values.size())
      throw Error(Errc::validation, "$.ranks must have one entry per world");
  }
  return doc;
}

// Reads `path`, or `in` when the path is empty or "-".
inline DocumentModel parse_input(const std::string& path, std::istream& in = std::cin) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(Errc::parse, "cannot open '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }
  return parse_document(text);
}

// Exact masses; rejects sums other than one unless `normalize` is set.
inline ProbDist to_distribution(const DocumentModel& doc, bool normalize) {
  if (doc.kind != DocumentKind::probability) throw Error(Errc::validation, "expected a probability document");
  std::vector<Rational> masses;
  for (std::size_t i = 0; i < doc.values.size(); ++i) {
    try {
      masses.push_back(Rational::parse(doc.values[i]));
    } catch (const Error& e) {
      throw Error(Errc::parse, "at $.values[" + std::to_string(i) + "]: " + e.message());
    }
  }
  WorldSpace space(doc.worlds);
  return normalize ? ProbDist::normalized(std::move(space), std::move(masses))
                   : ProbDist(std::move(space), std::move(masses));
}

// Ranks must have minimum 0 unless `densify` is set, in which case the
// ranking is densified (and so re-baselined) on load.
inline RankingFunction to_ranking(const DocumentModel& doc, bool densify) {
  if (doc.kind != DocumentKind::ranking) throw Error(Errc::validation, "expected a ranking document");
  std::vector<Rank> ranks;
  for (const auto& v : doc.values) ranks.push_back(std::stoull(v));
  WorldSpace space(doc.worlds);
  if (densify) return kappa::densify(RankingFunction::rebaselined(std::move(space), std::move(ranks)));
  return RankingFunction(std::move(space), std::move(ranks));
}

}  // namespace spohn::cli
