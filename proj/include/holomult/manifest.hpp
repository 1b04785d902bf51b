#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "holomult/parse.hpp"
#include "holomult/poisson.hpp"
#include "holomult/riemann.hpp"

namespace hlm {

/// One verification request, with every argument resolved at load time.
struct Task {
  std::string id;
  std::string kind;
  std::size_t line = 0;

  std::map<std::string, std::vector<CPoly>> polys;
  std::map<std::string, std::vector<VectorField>> fields;
  std::optional<Bivector> bivector;
  std::optional<HoloMetric> metric;
  std::map<std::string, std::int64_t> integers;
  std::map<std::string, std::string> words;
  std::vector<std::vector<CPoly>> matrix;              // structure=...
  std::optional<std::vector<GaussRat>> point;          // point=...

  const CPoly& poly(const std::string& key) const { return polys.at(key).front(); }
  const VectorField& field(const std::string& key) const { return fields.at(key).front(); }
  bool has(const std::string& key) const {
    return polys.count(key) || fields.count(key) || integers.count(key) || words.count(key);
  }
};

struct Manifest {
  std::size_t dim = 0;
  GaussRat volume_weight = GaussRat(1);
  NameTable polys;
  std::map<std::string, VectorField> fields;
  std::map<std::string, Bivector> bivectors;
  std::map<std::string, HoloMetric> metrics;
  std::vector<Task> tasks;

  VolumeForm volume() const { return VolumeForm(dim, volume_weight); }
};

// Line-oriented sectioned format:
//
//   [dim]                  one positive integer, first section
//   [volume]               one nonzero constant (default 1)
//   [poly]                 name = expr
//   [field]                name = expr, expr, ...      (n components)
//   [bivector NAME]        i j = expr                  (1 <= i < j <= n)
//   [metric NAME]          n rows of n comma-separated constants
//   [task]                 id: kind key=value ...
//
// '#' starts a comment. NAME defaults to P for bivectors and g for metrics.
// Task values are names, bare expressions without spaces, or "quoted"
// expressions; list-valued keys take comma-separated items. Throws
// ParseError (positioned) on every input problem.
Manifest parse_manifest(const std::string& text);
Manifest load_manifest(const std::string& path);

// Names of the task kinds understood by parse_manifest.
std::vector<std::string> task_kinds();

}  // namespace hlm
