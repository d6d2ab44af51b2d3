#include "collabdist/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <map>
#include <ostream>
#include <string_view>
#include <unordered_set>
#include <utility>

#include <json.hpp>

#include "collabdist/util.hpp"

namespace collabdist {

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trim(line.substr(start)));
      return fields;
    }
    fields.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

}  // namespace

std::vector<EdgeRecord> parse_edge_csv(std::istream& in) {
  std::vector<EdgeRecord> out;
  std::string line;
  std::size_t lineno = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++lineno;
    const auto stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto fields = split_fields(stripped);
    if (fields.size() != 3)
      throw MalformedLineError(lineno, "expected 3 comma-separated fields, got " +
                                           std::to_string(fields.size()));
    if (!seen_data && fields[0] == "author_a" && fields[1] == "author_b" &&
        fields[2] == "count") {
      seen_data = true;  // header row
      continue;
    }
    seen_data = true;
    if (fields[0].empty() || fields[1].empty())
      throw MalformedLineError(lineno, "empty author field");
    long long count = 0;
    const auto [end, ec] =
        std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), count);
    if (ec != std::errc() || end != fields[2].data() + fields[2].size())
      throw MalformedLineError(lineno,
                               "count is not an integer: '" + std::string(fields[2]) + "'");
    if (count <= 0)
      throw NonPositiveCountError("line " + std::to_string(lineno) +
                                  ": collaboration count must be >= 1, got " +
                                  std::to_string(count));
    if (fields[0] == fields[1])
      throw SelfEdgeError("line " + std::to_string(lineno) + ": author '" +
                          std::string(fields[0]) + "' paired with itself");
    out.push_back(
        {std::string(fields[0]), std::string(fields[1]), static_cast<std::uint64_t>(count)});
  }
  return out;
}

std::vector<PublicationRecord> parse_publications_jsonl(std::istream& in) {
  using nlohmann::json;
  std::vector<PublicationRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    json parsed;
    try {
      parsed = json::parse(line);
    } catch (const json::parse_error& e) {
      throw MalformedLineError(lineno, std::string("invalid JSON: ") + e.what());
    }
    if (!parsed.is_object()) throw MalformedLineError(lineno, "expected a JSON object");

    PublicationRecord rec;
    if (const auto it = parsed.find("id"); it != parsed.end()) {
      if (!it->is_string()) throw MalformedLineError(lineno, "field 'id' must be a string");
      rec.id = it->get<std::string>();
    } else {
      rec.id = std::to_string(lineno);
    }
    const auto authors = parsed.find("authors");
    if (authors == parsed.end() || !authors->is_array())
      throw MalformedLineError(lineno, "field 'authors' must be an array of strings");
    std::unordered_set<std::string> seen;
    for (const auto& element : *authors) {
      if (!element.is_string())
        throw MalformedLineError(lineno, "field 'authors' must contain only strings");
      const std::string raw = element.get<std::string>();
      std::string name{trim(raw)};
      if (name.empty()) throw MalformedLineError(lineno, "empty author name");
      if (seen.insert(name).second) rec.authors.push_back(std::move(name));
    }
    if (rec.authors.empty())
      throw EmptyAuthorListError(lineno, "publication '" + rec.id + "' has no authors");
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<EdgeRecord> expand_publications(std::span<const PublicationRecord> pubs) {
  std::map<std::pair<std::string, std::string>, std::uint64_t> counts;
  std::vector<std::string> names;
  for (const PublicationRecord& pub : pubs) {
    names.clear();
    for (const auto& raw : pub.authors) names.emplace_back(trim(raw));
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        auto& total = counts[{names[i], names[j]}];
        if (__builtin_add_overflow(total, std::uint64_t{1}, &total))
          throw ArithmeticOverflowError();
      }
    }
  }
  std::vector<EdgeRecord> out;
  out.reserve(counts.size());
  for (const auto& [pair, count] : counts) out.push_back({pair.first, pair.second, count});
  return out;
}

void write_edge_csv(std::ostream& out, std::span<const EdgeRecord> records) {
  out << "author_a,author_b,count\n";
  for (const EdgeRecord& r : records) {
    for (const std::string* label : {&r.author_a, &r.author_b}) {
      if (label->find_first_of(",\"\r\n") != std::string::npos)
        throw Error("author label '" + *label + "' cannot be represented in edge CSV");
    }
    out << r.author_a << ',' << r.author_b << ',' << r.count << '\n';
  }
}

}  // namespace collabdist
