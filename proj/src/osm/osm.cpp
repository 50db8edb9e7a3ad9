#include "microregion/osm.hpp"

#include <expat.h>

#include <charconv>
#include <cmath>
#include <istream>
#include <optional>
#include <ostream>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "microregion/error.hpp"
#include "util/io.hpp"

namespace microregion::osm {
namespace {

struct PendingWay {
  std::int64_t id;
  std::vector<std::int64_t> refs;
  std::map<std::string, std::string> tags;
  std::size_t line;
};

// Objects are kept in document order; ways are resolved once every node is known.
struct Entry {
  bool is_way;
  std::size_t index;
};

enum class Element { kNone, kNode, kWay, kRelation };

class Handler {
 public:
  explicit Handler(XML_Parser parser) : parser_(parser) {}

  void start(const char* name, const char** attrs) {
    const std::string_view tag(name);
    if (tag == "node") {
      open_element(Element::kNode);
      start_node(attrs);
    } else if (tag == "way") {
      open_element(Element::kWay);
      way_ = PendingWay{require_id(attrs), {}, {}, line()};
    } else if (tag == "relation") {
      open_element(Element::kRelation);
    } else if (tag == "tag") {
      if (current_ == Element::kNode || current_ == Element::kWay) add_tag(attrs);
    } else if (tag == "nd") {
      if (current_ == Element::kWay) way_.refs.push_back(require_int(attrs, "ref"));
    }
  }

  void end(const char* name) {
    const std::string_view tag(name);
    if (tag == "node" && current_ == Element::kNode) {
      ++result_.nodes_seen;
      if (!node_tags_.empty()) {
        entries_.push_back({false, result_.objects.size()});
        result_.objects.push_back(
            TaggedObject{node_id_, ObjectKind::kNode, node_point_, std::move(node_tags_)});
      }
      node_tags_.clear();
      current_ = Element::kNone;
    } else if (tag == "way" && current_ == Element::kWay) {
      ++result_.ways_seen;
      if (!way_.tags.empty()) {
        entries_.push_back({true, ways_.size()});
        ways_.push_back(std::move(way_));
      }
      way_ = PendingWay{};
      current_ = Element::kNone;
    } else if (tag == "relation" && current_ == Element::kRelation) {
      current_ = Element::kNone;
    }
  }

  ParseResult finish() {
    std::vector<TaggedObject> ordered;
    ordered.reserve(entries_.size());
    for (const auto& e : entries_) {
      if (!e.is_way) {
        ordered.push_back(std::move(result_.objects[e.index]));
        continue;
      }
      auto& w = ways_[e.index];
      if (auto obj = resolve_way(w)) ordered.push_back(std::move(*obj));
    }
    result_.objects = std::move(ordered);
    return std::move(result_);
  }

 private:
  std::size_t line() const { return XML_GetCurrentLineNumber(parser_); }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line()); }

  void open_element(Element e) {
    if (current_ != Element::kNone) fail("nested OSM element");
    current_ = e;
  }

  static const char* find_attr(const char** attrs, std::string_view key) {
    for (std::size_t i = 0; attrs[i] != nullptr; i += 2) {
      if (key == attrs[i]) return attrs[i + 1];
    }
    return nullptr;
  }

  std::int64_t require_int(const char** attrs, std::string_view key) const {
    const char* v = find_attr(attrs, key);
    if (v == nullptr) fail("missing attribute '" + std::string(key) + "'");
    const std::string_view s(v);
    std::int64_t out = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      fail("attribute '" + std::string(key) + "' is not an integer: " + std::string(s));
    }
    return out;
  }

  std::int64_t require_id(const char** attrs) const { return require_int(attrs, "id"); }

  double require_double(const char** attrs, std::string_view key) const {
    const char* v = find_attr(attrs, key);
    if (v == nullptr) fail("missing attribute '" + std::string(key) + "'");
    const std::string_view s(v);
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(out)) {
      fail("attribute '" + std::string(key) + "' is not a number: " + std::string(s));
    }
    return out;
  }

  void start_node(const char** attrs) {
    node_id_ = require_id(attrs);
    const double lat = require_double(attrs, "lat");
    const double lon = require_double(attrs, "lon");
    try {
      node_point_ = GeoPoint(lat, lon);
    } catch (const InvalidArgument& e) {
      fail(e.what());
    }
    coords_.insert_or_assign(node_id_, node_point_);
  }

  void add_tag(const char** attrs) {
    const char* k = find_attr(attrs, "k");
    const char* v = find_attr(attrs, "v");
    if (k == nullptr || v == nullptr) fail("tag without k/v");
    auto& tags = current_ == Element::kNode ? node_tags_ : way_.tags;
    if (!tags.emplace(k, v).second) {
      result_.warnings.push_back("line " + std::to_string(line()) + ": duplicate key '" + k +
                                 "', first value kept");
    }
  }

  std::optional<TaggedObject> resolve_way(const PendingWay& w) {
    std::size_t n = w.refs.size();
    if (n > 1 && w.refs.front() == w.refs.back()) --n;
    if (n == 0) {
      ++result_.skipped_ways;
      result_.warnings.push_back("way " + std::to_string(w.id) + " has no nodes, skipped");
      return std::nullopt;
    }
    double lat = 0.0;
    double lng = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto it = coords_.find(w.refs[i]);
      if (it == coords_.end()) {
        ++result_.skipped_ways;
        result_.warnings.push_back("way " + std::to_string(w.id) + " references missing node " +
                                   std::to_string(w.refs[i]) + ", skipped");
        return std::nullopt;
      }
      lat += it->second.lat();
      lng += it->second.lng();
    }
    const double dn = static_cast<double>(n);
    return TaggedObject{w.id, ObjectKind::kWay, GeoPoint(lat / dn, lng / dn), w.tags};
  }

  XML_Parser parser_;
  ParseResult result_;
  Element current_ = Element::kNone;

  std::int64_t node_id_ = 0;
  GeoPoint node_point_{0.0, 0.0};
  std::map<std::string, std::string> node_tags_;

  PendingWay way_;
  std::vector<PendingWay> ways_;
  std::vector<Entry> entries_;
  std::unordered_map<std::int64_t, GeoPoint> coords_;
};

struct ParserGuard {
  XML_Parser p;
  ~ParserGuard() { XML_ParserFree(p); }
};

struct CallbackState {
  Handler* handler;
  std::exception_ptr error;
  XML_Parser parser;
};

void XMLCALL on_start(void* data, const XML_Char* name, const XML_Char** attrs) {
  auto* st = static_cast<CallbackState*>(data);
  if (st->error) return;
  try {
    st->handler->start(name, attrs);
  } catch (...) {
    st->error = std::current_exception();
    XML_StopParser(st->parser, XML_FALSE);
  }
}

void XMLCALL on_end(void* data, const XML_Char* name) {
  auto* st = static_cast<CallbackState*>(data);
  if (st->error) return;
  try {
    st->handler->end(name);
  } catch (...) {
    st->error = std::current_exception();
    XML_StopParser(st->parser, XML_FALSE);
  }
}

}  // namespace

ParseResult parse_osm(std::istream& in) {
  ParserGuard guard{XML_ParserCreate(nullptr)};
  if (guard.p == nullptr) throw Error("cannot allocate XML parser");
  Handler handler(guard.p);
  CallbackState state{&handler, nullptr, guard.p};
  XML_SetUserData(guard.p, &state);
  XML_SetElementHandler(guard.p, on_start, on_end);

  std::vector<char> buf(1 << 16);
  for (;;) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    const auto got = in.gcount();
    const bool last = got < static_cast<std::streamsize>(buf.size());
    if (in.bad()) throw IoError("read error while parsing OSM XML");
    if (XML_Parse(guard.p, buf.data(), static_cast<int>(got), last ? XML_TRUE : XML_FALSE) ==
        XML_STATUS_ERROR) {
      if (state.error) std::rethrow_exception(state.error);
      throw ParseError(XML_ErrorString(XML_GetErrorCode(guard.p)),
                       XML_GetCurrentLineNumber(guard.p));
    }
    if (last) break;
  }
  return handler.finish();
}

ParseResult parse_osm_file(const std::filesystem::path& path) {
  auto in = util::open_input(path);
  return parse_osm(in);
}

TagWhitelist::TagWhitelist(const std::vector<std::string>& entries) {
  if (entries.empty()) throw InvalidArgument("tag whitelist is empty");
  for (const auto& raw : entries) {
    const auto eq = raw.find('=');
    const std::string key = raw.substr(0, eq);
    if (key.empty()) throw InvalidArgument("whitelist entry with empty key: '" + raw + "'");
    const bool fresh = eq == std::string::npos ? keys_.insert(key).second
                                               : pairs_.emplace(key, raw.substr(eq + 1)).second;
    if (!fresh) throw InvalidArgument("duplicate whitelist entry: '" + raw + "'");
  }
}

TagWhitelist TagWhitelist::parse(std::istream& in) {
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = util::trim(line);
    if (!line.empty()) entries.push_back(line);
  }
  return TagWhitelist(entries);
}

TagWhitelist TagWhitelist::from_file(const std::filesystem::path& path) {
  auto in = util::open_input(path);
  return parse(in);
}

bool TagWhitelist::allows(const std::string& key, const std::string& value) const {
  return keys_.count(key) != 0 || pairs_.count({key, value}) != 0;
}

std::vector<std::string> TagWhitelist::entries() const {
  std::vector<std::string> out(keys_.begin(), keys_.end());
  for (const auto& [k, v] : pairs_) out.push_back(feature_name(k, v));
  return out;
}

std::vector<TaggedObject> filter_tags(const std::vector<TaggedObject>& objects,
                                      const TagWhitelist& whitelist) {
  std::vector<TaggedObject> out;
  for (const auto& obj : objects) {
    TaggedObject kept{obj.osm_id, obj.kind, obj.point, {}};
    for (const auto& [k, v] : obj.tags) {
      if (whitelist.allows(k, v)) kept.tags.emplace(k, v);
    }
    if (!kept.tags.empty()) out.push_back(std::move(kept));
  }
  return out;
}

std::string feature_name(const std::string& key, const std::string& value) {
  return key + "=" + value;
}

CellFeatures aggregate_counts(const std::vector<TaggedObject>& objects, int resolution) {
  CellFeatures out;
  if (resolution < 0 || resolution > hexgrid::kMaxResolution) {
    throw InvalidArgument("resolution must be in [0, 15], got " + std::to_string(resolution));
  }
  for (const auto& obj : objects) {
    auto& counts = out[hexgrid::latlng_to_cell(obj.point, resolution)];
    for (const auto& [k, v] : obj.tags) ++counts[feature_name(k, v)];
  }
  return out;
}

void merge_counts(CellFeatures& into, const CellFeatures& from) {
  for (const auto& [cell, counts] : from) {
    auto& dst = into[cell];
    for (const auto& [name, n] : counts) {
      if (n != 0) dst[name] += n;
    }
  }
}

void write_cell_features(std::ostream& out, const CellFeatures& features) {
  for (const auto& [cell, counts] : features) {
    nlohmann::ordered_json rec;
    rec["cell"] = cell.to_string();
    rec["counts"] = nlohmann::json(counts);
    out << rec.dump() << '\n';
  }
  if (!out) throw IoError("write error on cell feature output");
}

CellFeatures read_cell_features(std::istream& in) {
  CellFeatures out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (util::trim(line).empty()) continue;
    try {
      const auto rec = nlohmann::json::parse(line);
      const auto cell = hexgrid::CellId::parse(rec.at("cell").get<std::string>());
      if (out.count(cell) != 0) throw SchemaError("duplicate cell " + cell.to_string());
      auto& counts = out[cell];
      for (const auto& [name, n] : rec.at("counts").items()) {
        if (!n.is_number_unsigned()) throw SchemaError("count for '" + name + "' is not a non-negative integer");
        if (n.get<std::uint64_t>() != 0) counts[name] = n.get<std::uint64_t>();
      }
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("cell feature record: ") + e.what(), lineno);
    } catch (const InputError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return out;
}

}  // namespace microregion::osm
