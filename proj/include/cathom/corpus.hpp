#pragma once

#include <set>
#include <string>
#include <vector>

#include "cathom/diagram.hpp"

namespace cathom {

/// Built-in index categories: terminal, interval, span, cospan, square.
std::vector<std::string> corpus_category_names();
CatPtr corpus_category(const std::string& name);

/// A category with a chosen full subcategory.  The corpus contains every
/// built-in category paired with itself plus the relative "pushout-pair"
/// instance (span with the two outer objects).
struct CorpusPair {
  std::string name;
  CatPtr c;
  std::set<std::string> d_objs;
};

std::vector<CorpusPair> corpus_pairs();

/// Collapse of any simplicial set onto the point.
SSetMap collapse_to_point(const SSetPtr& k, const SSetPtr& pt);

/// Named diagrams over c: "point", "s0", "sphere-boundary" (constant values)
/// and "mixed" (boundary of the 2-simplex at the sources, point elsewhere).
std::vector<std::pair<std::string, Diagram>> corpus_diagrams(const CatPtr& c,
                                                             int dim_cap);

} // namespace cathom
