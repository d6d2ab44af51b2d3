#include "collabdist/bounds.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <queue>
#include <stdexcept>

#include "collabdist/util.hpp"

namespace collabdist {

namespace {

std::uint64_t pair_key_of(std::uint32_t a, std::uint32_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

bool contains_space(std::string_view s) {
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

std::string quoted_label(const std::string& label) {
  return contains_space(label) ? "\"" + label + "\"" : label;
}

// Candidate ranking when link values tie: prefer the most direct
// justification.
int rule_rank(Rule rule, FactKind kind) {
  switch (rule) {
    case Rule::Stated:
      return kind == FactKind::Exact ? 0 : 1;
    case Rule::DirectLink:
      return 2;
    case Rule::CountReciprocal:
      return 3;
    case Rule::MetricTransfer:
      return kind == FactKind::Exact ? 4 : 5;
    default:
      return 6;
  }
}

}  // namespace

std::string_view rule_name(Rule rule) noexcept {
  switch (rule) {
    case Rule::Stated:
      return "stated";
    case Rule::DirectLink:
      return "direct-link";
    case Rule::CountReciprocal:
      return "count-reciprocal";
    case Rule::MetricTransfer:
      return "metric-transfer";
    case Rule::TriangleForward:
      return "triangle";
    case Rule::TriangleSym:
      return "triangle-sym";
  }
  return "?";
}

FactLedger::AuthorId FactLedger::intern(std::string_view raw) {
  const auto label = trim(raw);
  if (label.empty()) throw std::invalid_argument("empty author label");
  const auto [it, inserted] =
      index_.try_emplace(std::string(label), static_cast<AuthorId>(authors_.size()));
  if (inserted) authors_.emplace_back(label);
  return it->second;
}

std::optional<FactLedger::AuthorId> FactLedger::lookup(std::string_view label) const {
  const auto it = index_.find(std::string(trim(label)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FactLedger::knows(std::string_view label) const { return lookup(label).has_value(); }

FactLedger::PairRecord& FactLedger::ensure_pair(AuthorId a, AuthorId b) {
  const auto key = pair_key_of(a, b);
  const auto [it, inserted] = pairs_.try_emplace(key);
  if (inserted) pair_order_.push_back(key);
  return it->second;
}

const FactLedger::PairRecord* FactLedger::find_pair(AuthorId a, AuthorId b) const {
  const auto it = pairs_.find(pair_key_of(a, b));
  return it == pairs_.end() ? nullptr : &it->second;
}

void FactLedger::add(const CountFact& fact) {
  if (fact.min_count == 0)
    throw NonPositiveCountError("count fact requires min_count >= 1");
  const AuthorId a = intern(fact.author_a);
  const AuthorId b = intern(fact.author_b);
  if (a == b) throw SelfEdgeError("count fact pairs author '" + authors_[a] + "' with itself");
  PairRecord& rec = ensure_pair(a, b);
  // Keep the strongest lower bound on the count.
  if (!rec.count || rec.count->min_count < fact.min_count)
    rec.count = StatedCount{a, b, fact.min_count};
}

void FactLedger::add(const DistanceFact& fact) {
  if (fact.value.is_negative())
    throw std::invalid_argument("distance fact value must be non-negative");
  if (fact.metric == Metric::Unweighted && !fact.value.is_integer())
    throw std::invalid_argument("unweighted distance facts must have integer values");
  const AuthorId a = intern(fact.author_a);
  const AuthorId b = intern(fact.author_b);
  if (a == b) {
    if (!fact.value.is_zero())
      throw std::invalid_argument("the distance from an author to itself is 0, got " +
                                  fact.value.str());
    return;  // accepted, redundant
  }
  if (fact.value.is_zero())
    throw std::invalid_argument("distance 0 asserted for distinct authors '" + authors_[a] +
                                "' and '" + authors_[b] + "'");

  PairRecord& rec = ensure_pair(a, b);
  auto& exact = fact.metric == Metric::Unweighted ? rec.exact_u : rec.exact_w;
  auto& upper = fact.metric == Metric::Unweighted ? rec.upper_u : rec.upper_w;
  if (fact.kind == FactKind::Exact) {
    if (exact && exact->value != fact.value)
      throw InconsistentFactError("contradictory exact facts for ('" + authors_[a] + "', '" +
                                  authors_[b] + "') under the " +
                                  std::string(metric_name(fact.metric)) + " metric: " +
                                  exact->value.str() + " vs " + fact.value.str());
    if (!exact) exact = Stated{a, b, FactKind::Exact, fact.value};
    if (upper && upper->value >= exact->value) upper.reset();  // superseded
  } else {
    if (exact && exact->value <= fact.value) return;  // redundant
    if (!upper || fact.value < upper->value)
      upper = Stated{a, b, FactKind::UpperBound, fact.value};
  }
}

std::string FactLedger::cite(const Stated& fact, Metric metric) const {
  return "dist " + std::string(metric_token(metric)) + " " +
         std::string(fact_kind_token(fact.kind)) + " " + quoted_label(authors_[fact.from]) + " " +
         quoted_label(authors_[fact.to]) + " " + fact.value.str();
}

std::string FactLedger::cite(const StatedCount& fact) const {
  return "count " + quoted_label(authors_[fact.from]) + " " + quoted_label(authors_[fact.to]) +
         " " + std::to_string(fact.min_count);
}

std::vector<DistanceFact> FactLedger::derived_base_facts() const {
  std::vector<DistanceFact> out;
  for (const auto key : pair_order_) {
    const PairRecord& rec = pairs_.at(key);
    if (rec.count) {
      const std::string& from = authors_[rec.count->from];
      const std::string& to = authors_[rec.count->to];
      out.push_back({from, to, Metric::Weighted, FactKind::UpperBound,
                     Rational(1, Int128(rec.count->min_count))});
      out.push_back({from, to, Metric::Unweighted, FactKind::Exact, Rational(1)});
    }
    for (const auto& stated : {rec.exact_u, rec.upper_u}) {
      if (!stated) continue;
      out.push_back({authors_[stated->from], authors_[stated->to], Metric::Weighted,
                     FactKind::UpperBound, stated->value});
    }
  }
  return out;
}

std::optional<FactLedger::Link> FactLedger::best_link(AuthorId from, AuthorId to,
                                                      Metric metric) const {
  const PairRecord* rec = find_pair(from, to);
  if (!rec) return std::nullopt;

  std::optional<Link> best;
  const auto consider = [&](Rule rule, FactKind kind, const Rational& value, AuthorId stated_from,
                            AuthorId stated_to, std::string citation) {
    if (best && (best->value < value ||
                 (best->value == value &&
                  rule_rank(best->rule, best->kind) <= rule_rank(rule, kind))))
      return;
    best = Link{from, to, stated_from, stated_to, rule, kind, value, std::move(citation)};
  };

  if (metric == Metric::Unweighted) {
    if (rec->exact_u)
      consider(Rule::Stated, FactKind::Exact, rec->exact_u->value, rec->exact_u->from,
               rec->exact_u->to, cite(*rec->exact_u, Metric::Unweighted));
    if (rec->upper_u)
      consider(Rule::Stated, FactKind::UpperBound, rec->upper_u->value, rec->upper_u->from,
               rec->upper_u->to, cite(*rec->upper_u, Metric::Unweighted));
    // A collaborating pair is adjacent, so its unweighted distance is
    // exactly 1. The count's reciprocal is never used here.
    if (rec->count)
      consider(Rule::DirectLink, FactKind::Exact, Rational(1), rec->count->from, rec->count->to,
               cite(*rec->count));
  } else {
    if (rec->exact_w)
      consider(Rule::Stated, FactKind::Exact, rec->exact_w->value, rec->exact_w->from,
               rec->exact_w->to, cite(*rec->exact_w, Metric::Weighted));
    if (rec->upper_w)
      consider(Rule::Stated, FactKind::UpperBound, rec->upper_w->value, rec->upper_w->from,
               rec->upper_w->to, cite(*rec->upper_w, Metric::Weighted));
    if (rec->count)
      consider(Rule::CountReciprocal, FactKind::UpperBound,
               Rational(1, Int128(rec->count->min_count)), rec->count->from, rec->count->to,
               cite(*rec->count));
    if (rec->exact_u)
      consider(Rule::MetricTransfer, FactKind::UpperBound, rec->exact_u->value, rec->exact_u->from,
               rec->exact_u->to, cite(*rec->exact_u, Metric::Unweighted));
    if (rec->upper_u)
      consider(Rule::MetricTransfer, FactKind::UpperBound, rec->upper_u->value, rec->upper_u->from,
               rec->upper_u->to, cite(*rec->upper_u, Metric::Unweighted));
  }
  return best;
}

std::vector<std::vector<FactLedger::Link>> FactLedger::link_adjacency(Metric metric) const {
  std::vector<std::vector<Link>> adjacency(authors_.size());
  for (const auto key : pair_order_) {
    const AuthorId lo = static_cast<AuthorId>(key >> 32);
    const AuthorId hi = static_cast<AuthorId>(key & 0xffffffffu);
    if (auto link = best_link(lo, hi, metric)) adjacency[lo].push_back(std::move(*link));
    if (auto link = best_link(hi, lo, metric)) adjacency[hi].push_back(std::move(*link));
  }
  for (auto& row : adjacency)
    std::sort(row.begin(), row.end(), [](const Link& a, const Link& b) { return a.to < b.to; });
  return adjacency;
}

BoundDerivation FactLedger::assemble(std::string source, std::string target, Metric metric,
                                     std::span<const Link> chain) const {
  BoundDerivation derivation{std::move(source), std::move(target), metric, std::nullopt, {}};
  Rational running(0);
  bool first = true;
  for (const Link& link : chain) {
    if (first) {
      running = link.value;
      derivation.steps.push_back({link.rule, authors_[link.from], authors_[link.to], link.kind,
                                  link.value, link.citation, running});
      first = false;
      continue;
    }
    derivation.steps.push_back({link.rule, authors_[link.from], authors_[link.to], link.kind,
                                link.value, link.citation, running});
    running = running + link.value;
    const Rule triangle =
        link.from == link.stated_from ? Rule::TriangleForward : Rule::TriangleSym;
    derivation.steps.push_back({triangle, derivation.source, authors_[link.to], link.kind,
                                link.value, link.citation, running});
  }
  derivation.bound = running;
  return derivation;
}

BoundDerivation FactLedger::tightest_upper_bound(std::string_view a, std::string_view b,
                                                 Metric metric) const {
  const std::string sa{trim(a)};
  const std::string sb{trim(b)};
  if (sa.empty() || sb.empty()) throw std::invalid_argument("empty author label");
  if (sa == sb) return {sa, sb, metric, Rational(0), {}};

  const auto ia = lookup(sa);
  if (!ia) throw UnknownAuthorError("unknown author '" + sa + "'");
  const auto ib = lookup(sb);
  if (!ib) throw UnknownAuthorError("unknown author '" + sb + "'");

  const auto adjacency = link_adjacency(metric);

  // Shortest distances over the fact graph, measured to the target, so the
  // chain can then be walked from the source in lexicographic id order.
  std::vector<std::optional<Rational>> dist(authors_.size());
  struct Entry {
    Rational d;
    AuthorId v;
  };
  const auto entry_after = [](const Entry& x, const Entry& y) {
    if (x.d != y.d) return y.d < x.d;
    return y.v < x.v;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(entry_after)> heap(entry_after);
  dist[*ib] = Rational(0);
  heap.push({Rational(0), *ib});
  while (!heap.empty()) {
    const Entry top = heap.top();
    heap.pop();
    if (*dist[top.v] < top.d) continue;
    for (const Link& link : adjacency[top.v]) {
      Rational candidate = top.d + link.value;
      if (!dist[link.to] || candidate < *dist[link.to]) {
        dist[link.to] = candidate;
        heap.push({std::move(candidate), link.to});
      }
    }
  }
  if (!dist[*ia]) return {sa, sb, metric, std::nullopt, {}};

  std::vector<Link> chain;
  AuthorId u = *ia;
  while (u != *ib) {
    for (const Link& link : adjacency[u]) {
      if (!dist[link.to]) continue;
      if (*dist[link.to] + link.value == *dist[u]) {
        chain.push_back(link);
        u = link.to;
        break;
      }
    }
  }
  return assemble(sa, sb, metric, chain);
}

BoundDerivation FactLedger::chain_bound(std::span<const std::string> path, Metric metric) const {
  if (path.empty()) throw std::invalid_argument("chain query requires at least one author");
  std::vector<std::string> labels;
  labels.reserve(path.size());
  for (const auto& raw : path) {
    auto label = std::string(trim(raw));
    if (label.empty()) throw std::invalid_argument("empty author label");
    labels.push_back(std::move(label));
  }

  std::vector<Link> chain;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    const std::string& x = labels[i - 1];
    const std::string& y = labels[i];
    if (x == y) continue;  // identity, contributes 0
    const auto ix = lookup(x);
    const auto iy = lookup(y);
    std::optional<Link> link;
    if (ix && iy) link = best_link(*ix, *iy, metric);
    if (!link)
      throw MissingLinkError("no usable " + std::string(metric_name(metric)) +
                             " fact for consecutive pair ('" + x + "', '" + y + "')");
    chain.push_back(std::move(*link));
  }
  return assemble(labels.front(), labels.back(), metric, chain);
}

namespace {

std::vector<std::string> tokenize_fact_line(std::string_view line, std::size_t lineno) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    if (line[i] == '"') {
      const auto close = line.find('"', i + 1);
      if (close == std::string_view::npos)
        throw MalformedLineError(lineno, "unterminated quoted token");
      tokens.emplace_back(line.substr(i + 1, close - i - 1));
      i = close + 1;
    } else {
      auto end = i;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
      tokens.emplace_back(line.substr(i, end - i));
      i = end;
    }
  }
  return tokens;
}

}  // namespace

FactLedger parse_facts(std::istream& in) {
  FactLedger ledger;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const auto tokens = tokenize_fact_line(stripped, lineno);
    try {
      if (tokens[0] == "count") {
        if (tokens.size() != 4)
          throw MalformedLineError(lineno, "expected: count <authorA> <authorB> <min_count>");
        long long value = 0;
        const auto [end, ec] =
            std::from_chars(tokens[3].data(), tokens[3].data() + tokens[3].size(), value);
        if (ec != std::errc() || end != tokens[3].data() + tokens[3].size())
          throw MalformedLineError(lineno, "min_count is not an integer: '" + tokens[3] + "'");
        if (value < 1) throw MalformedLineError(lineno, "min_count must be >= 1");
        ledger.add(CountFact{tokens[1], tokens[2], static_cast<std::uint64_t>(value)});
      } else if (tokens[0] == "dist") {
        if (tokens.size() != 6)
          throw MalformedLineError(
              lineno, "expected: dist <u|w> <exact|upper> <authorA> <authorB> <value>");
        const auto metric = metric_from_token(tokens[1]);
        if (!metric) throw MalformedLineError(lineno, "metric must be 'u' or 'w'");
        FactKind kind;
        if (tokens[2] == "exact")
          kind = FactKind::Exact;
        else if (tokens[2] == "upper")
          kind = FactKind::UpperBound;
        else
          throw MalformedLineError(lineno, "fact kind must be 'exact' or 'upper'");
        const auto value = Rational::parse(tokens[5]);
        if (!value)
          throw MalformedLineError(lineno,
                                   "value must be an integer or fraction p/q: '" + tokens[5] + "'");
        ledger.add(DistanceFact{tokens[3], tokens[4], *metric, kind, *value});
      } else {
        throw MalformedLineError(lineno, "unknown fact type '" + tokens[0] + "'");
      }
    } catch (const InconsistentFactError& e) {
      throw InconsistentFactError("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw MalformedLineError(lineno, e.what());
    }
  }
  return ledger;
}

}  // namespace collabdist
