#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "microregion/geo.hpp"
#include "microregion/hexgrid.hpp"

namespace microregion::osm {

enum class ObjectKind { kNode, kWay };

struct TaggedObject {
  std::int64_t osm_id = 0;
  ObjectKind kind = ObjectKind::kNode;
  GeoPoint point{0.0, 0.0};
  /// OSM keys are unique within one element.
  std::map<std::string, std::string> tags;
};

struct ParseResult {
  std::vector<TaggedObject> objects;
  std::size_t nodes_seen = 0;
  std::size_t ways_seen = 0;
  /// Ways dropped because a referenced node was absent or they had no nodes.
  std::size_t skipped_ways = 0;
  std::vector<std::string> warnings;
};

/// Streams OSM XML. Nodes keep their own position, ways get the mean of
/// their member node coordinates (a closing repeated node counted once).
/// Untagged objects and relations are dropped. Malformed XML throws
/// ParseError carrying the line number.
ParseResult parse_osm(std::istream& in);
ParseResult parse_osm_file(const std::filesystem::path& path);

class TagWhitelist {
 public:
  /// Entries are bare keys or exact key=value pairs. Throws InvalidArgument
  /// on an empty list, an empty key or a duplicate.
  explicit TagWhitelist(const std::vector<std::string>& entries);

  /// One entry per line, blank lines and '#' comments ignored.
  static TagWhitelist parse(std::istream& in);
  static TagWhitelist from_file(const std::filesystem::path& path);

  bool allows(const std::string& key, const std::string& value) const;
  std::vector<std::string> entries() const;

 private:
  std::set<std::string> keys_;
  std::set<std::pair<std::string, std::string>> pairs_;
};

std::vector<TaggedObject> filter_tags(const std::vector<TaggedObject>& objects,
                                      const TagWhitelist& whitelist);

/// Sparse "key=value" -> count. Zero counts are never stored.
using TagCountVector = std::map<std::string, std::uint64_t>;
using CellFeatures = std::map<hexgrid::CellId, TagCountVector>;

std::string feature_name(const std::string& key, const std::string& value);

CellFeatures aggregate_counts(const std::vector<TaggedObject>& objects, int resolution);

/// Adds every count of `from` into `into`.
void merge_counts(CellFeatures& into, const CellFeatures& from);

/// JSON lines: {"cell": "<hex>", "counts": {"key=value": n, ...}}, cells ascending.
void write_cell_features(std::ostream& out, const CellFeatures& features);
CellFeatures read_cell_features(std::istream& in);

}  // namespace microregion::osm
