#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "collabdist/graph.hpp"

namespace collabdist {

/// One publication: an opaque id plus its distinct author list (trimmed,
/// de-duplicated, first-appearance order).
struct PublicationRecord {
  std::string id;
  std::vector<std::string> authors;

  friend bool operator==(const PublicationRecord&, const PublicationRecord&) = default;
};

/// Parses `author_a,author_b,count` lines. `#`-comment and blank lines are
/// skipped, a leading `author_a,author_b,count` header is tolerated, fields
/// are trimmed. Errors carry 1-based line numbers.
std::vector<EdgeRecord> parse_edge_csv(std::istream& in);

/// Parses one JSON object per line: {"id": <string?>, "authors": [...]}.
/// A missing id defaults to the line number. Author names are trimmed and
/// de-duplicated within a record.
std::vector<PublicationRecord> parse_publications_jsonl(std::istream& in);

/// Expands publications to pairwise collaboration counts: every unordered
/// author pair of a k-author publication accrues one joint publication
/// (k*(k-1)/2 increments in total; single-author records contribute
/// nothing). Output pairs are ordered lexicographically by label and the
/// rows sorted the same way.
std::vector<EdgeRecord> expand_publications(std::span<const PublicationRecord> pubs);

/// Writes the canonical edge CSV, header included. Labels containing a
/// comma, quote or line break cannot be represented and are rejected.
void write_edge_csv(std::ostream& out, std::span<const EdgeRecord> records);

}  // namespace collabdist
