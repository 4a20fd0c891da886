#include "fairsel/selection.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fairsel/error.hpp"
#include "fairsel/strings.hpp"

namespace fairsel {

namespace {

constexpr const char* kQualityLabel = "quality";
constexpr const char* kDemographicLabel = "demographic";

// Shared scratch for one selection run. Authors are renumbered to dense indices so
// participation tests are epoch-marked array sweeps instead of set lookups.
struct Ctx {
  const std::vector<PaperProfile>* pool = nullptr;
  SelectionRequest request;
  int n = 0;
  std::vector<std::vector<int>> paper_authors;
  std::vector<std::array<bool, kFeatureCount>> author_flags;
  std::vector<int> visit_epoch;
  int epoch = 0;
  std::vector<char> selected;
  std::vector<int> quality_order;
  std::vector<int> picks;
  std::vector<const char*> labels;

  const PaperProfile& paper(int i) const { return (*pool)[i]; }

  void take(int paper_idx, const char* label) {
    selected[paper_idx] = 1;
    picks.push_back(paper_idx);
    labels.push_back(label);
  }

  // Participation of the picks plus the first `fill` unselected quality-queue papers,
  // over unique authors.
  ParityVector projected_parity(int fill) {
    ++epoch;
    std::array<long long, kFeatureCount> counts{};
    long long total = 0;
    auto add_paper = [&](int p) {
      for (int a : paper_authors[p]) {
        if (visit_epoch[a] == epoch) continue;
        visit_epoch[a] = epoch;
        ++total;
        for (std::size_t i = 0; i < kFeatureCount; ++i) {
          if (author_flags[a][i]) ++counts[i];
        }
      }
    };
    for (int p : picks) add_paper(p);
    int need = fill;
    for (int p : quality_order) {
      if (need == 0) break;
      if (selected[p]) continue;
      add_paper(p);
      --need;
    }
    ParityVector v;
    if (total == 0) return v;
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      v[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    }
    return v;
  }

  // True when phase-1 style draining may stop: the projected rule tops the picks up
  // to N from the quality queue, the proportional rule looks at the picks alone and
  // therefore never stops before the first pick.
  bool drain_done(const ParityVector& target,
                  const std::optional<std::array<bool, kFeatureCount>>& subset) {
    if (request.parity_rule == ParityRule::Projected) {
      return parity_met(projected_parity(n - static_cast<int>(picks.size())), target, subset);
    }
    return !picks.empty() && parity_met(projected_parity(0), target, subset);
  }

  void fill_from_quality() {
    for (int p : quality_order) {
      if (static_cast<int>(picks.size()) >= n) break;
      if (selected[p]) continue;
      take(p, kQualityLabel);
    }
  }

  SelectionResult finish() {
    SelectionResult result;
    result.request = request;
    result.selected.reserve(picks.size());
    result.provenance.reserve(picks.size());
    for (std::size_t i = 0; i < picks.size(); ++i) {
      result.selected.push_back(paper(picks[i]).paper_id);
      result.provenance.emplace_back(labels[i]);
    }
    result.achieved_parity = projected_parity(0);
    return result;
  }
};

Ctx make_ctx(const std::vector<PaperProfile>& pool,
             const std::map<std::string, AuthorProfile>& authors,
             const SelectionRequest& request) {
  if (request.n_papers <= 0) {
    throw Error(ErrorCode::InvalidArgument,
                "n_papers must be positive, got " + std::to_string(request.n_papers));
  }
  if (static_cast<int>(pool.size()) < request.n_papers) {
    throw Error(ErrorCode::PoolTooSmall, "pool has " + std::to_string(pool.size()) +
                                             " papers but " + std::to_string(request.n_papers) +
                                             " were requested");
  }
  Ctx ctx;
  ctx.pool = &pool;
  ctx.request = request;
  ctx.n = request.n_papers;
  ctx.paper_authors.resize(pool.size());
  ctx.selected.assign(pool.size(), 0);
  std::set<std::string> seen_ids;
  std::map<std::string, int> author_index;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const PaperProfile& p = pool[i];
    if (p.mode != request.mode) {
      throw Error(ErrorCode::InvalidArgument,
                  "paper " + p.paper_id + " was profiled in " + to_string(p.mode) +
                      " mode but the request asks for " + to_string(request.mode));
    }
    if (!seen_ids.insert(p.paper_id).second) {
      throw Error(ErrorCode::InvalidArgument, "pool lists paper " + p.paper_id + " twice");
    }
    for (const std::string& author_id : p.author_ids) {
      auto [it, inserted] = author_index.emplace(author_id, author_index.size());
      if (inserted) {
        auto profile = authors.find(author_id);
        if (profile == authors.end()) {
          throw Error(ErrorCode::DanglingReference,
                      "paper " + p.paper_id + " references unprofiled author " + author_id);
        }
        ctx.author_flags.push_back(profile->second.protected_membership);
      }
      ctx.paper_authors[i].push_back(it->second);
    }
  }
  ctx.visit_epoch.assign(ctx.author_flags.size(), 0);
  ctx.quality_order.resize(pool.size());
  std::iota(ctx.quality_order.begin(), ctx.quality_order.end(), 0);
  std::sort(ctx.quality_order.begin(), ctx.quality_order.end(), [&pool](int a, int b) {
    if (pool[a].quality_score != pool[b].quality_score) {
      return pool[a].quality_score > pool[b].quality_score;
    }
    if (pool[a].pd_score != pool[b].pd_score) return pool[a].pd_score > pool[b].pd_score;
    return pool[a].paper_id < pool[b].paper_id;
  });
  return ctx;
}

std::optional<std::array<bool, kFeatureCount>> single_feature(std::size_t f) {
  std::array<bool, kFeatureCount> subset{};
  subset[f] = true;
  return subset;
}

}  // namespace

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::OverallDiversity:
      return "overall";
    case Algorithm::MultiFaceted:
      return "multifaceted";
    default:
      return "roundrobin";
  }
}

std::string to_string(ParityRule r) {
  return r == ParityRule::Projected ? "projected" : "proportional";
}

Algorithm parse_algorithm(const std::string& text) {
  const std::string t = lower(trim(text));
  if (t == "overall") return Algorithm::OverallDiversity;
  if (t == "multifaceted") return Algorithm::MultiFaceted;
  if (t == "roundrobin") return Algorithm::RoundRobin;
  throw Error(ErrorCode::ParseError, "unknown algorithm '" + text + "'");
}

ParityRule parse_parity_rule(const std::string& text) {
  const std::string t = lower(trim(text));
  if (t == "projected") return ParityRule::Projected;
  if (t == "proportional") return ParityRule::Proportional;
  throw Error(ErrorCode::ParseError, "unknown parity rule '" + text + "'");
}

std::array<std::size_t, kFeatureCount> feature_processing_order(const ParityVector& pool_parity) {
  std::array<std::size_t, kFeatureCount> order{};
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return pool_parity[a] < pool_parity[b]; });
  return order;
}

SelectionResult overall_diversity(const std::vector<PaperProfile>& pool,
                                  const std::map<std::string, AuthorProfile>& authors,
                                  const SelectionRequest& request,
                                  const ParityVector& pool_parity) {
  Ctx ctx = make_ctx(pool, authors, request);
  std::vector<int> demog_order(pool.size());
  std::iota(demog_order.begin(), demog_order.end(), 0);
  std::sort(demog_order.begin(), demog_order.end(), [&pool](int a, int b) {
    if (pool[a].pd_score != pool[b].pd_score) return pool[a].pd_score > pool[b].pd_score;
    if (pool[a].quality_score != pool[b].quality_score) {
      return pool[a].quality_score > pool[b].quality_score;
    }
    return pool[a].paper_id < pool[b].paper_id;
  });
  std::size_t cursor = 0;
  while (static_cast<int>(ctx.picks.size()) < ctx.n) {
    if (ctx.drain_done(pool_parity, std::nullopt)) break;
    while (cursor < demog_order.size() && ctx.selected[demog_order[cursor]]) ++cursor;
    if (cursor == demog_order.size()) break;
    ctx.take(demog_order[cursor], kDemographicLabel);
  }
  ctx.fill_from_quality();
  return ctx.finish();
}

SelectionResult multifaceted(const std::vector<PaperProfile>& pool,
                             const std::map<std::string, AuthorProfile>& authors,
                             const SelectionRequest& request, const ParityVector& pool_parity) {
  Ctx ctx = make_ctx(pool, authors, request);
  std::array<std::vector<int>, kFeatureCount> queues;
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (pool[i].protected_any[f]) queues[f].push_back(static_cast<int>(i));
    }
    std::sort(queues[f].begin(), queues[f].end(), [&pool](int a, int b) {
      if (pool[a].quality_score != pool[b].quality_score) {
        return pool[a].quality_score > pool[b].quality_score;
      }
      if (pool[a].pd_score != pool[b].pd_score) return pool[a].pd_score > pool[b].pd_score;
      return pool[a].paper_id < pool[b].paper_id;
    });
  }
  for (std::size_t f : feature_processing_order(pool_parity)) {
    const auto subset = single_feature(f);
    std::size_t cursor = 0;
    while (static_cast<int>(ctx.picks.size()) < ctx.n) {
      if (ctx.drain_done(pool_parity, subset)) break;
      while (cursor < queues[f].size() && ctx.selected[queues[f][cursor]]) ++cursor;
      if (cursor == queues[f].size()) break;
      ctx.take(queues[f][cursor], kFeatureNames[f]);
    }
  }
  ctx.fill_from_quality();
  return ctx.finish();
}

SelectionResult round_robin(const std::vector<PaperProfile>& pool,
                            const std::map<std::string, AuthorProfile>& authors,
                            const SelectionRequest& request) {
  Ctx ctx = make_ctx(pool, authors, request);
  std::array<std::vector<int>, kFeatureCount> queues;
  std::array<std::size_t, kFeatureCount> cursor{};
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    queues[f].resize(pool.size());
    std::iota(queues[f].begin(), queues[f].end(), 0);
    std::sort(queues[f].begin(), queues[f].end(), [&pool, f](int a, int b) {
      if (pool[a].features[f] != pool[b].features[f]) {
        return pool[a].features[f] > pool[b].features[f];
      }
      if (pool[a].quality_score != pool[b].quality_score) {
        return pool[a].quality_score > pool[b].quality_score;
      }
      return pool[a].paper_id < pool[b].paper_id;
    });
  }
  while (static_cast<int>(ctx.picks.size()) < ctx.n) {
    bool progressed = false;
    for (std::size_t f = 0; f < kFeatureCount && static_cast<int>(ctx.picks.size()) < ctx.n; ++f) {
      while (cursor[f] < queues[f].size() && ctx.selected[queues[f][cursor[f]]]) ++cursor[f];
      if (cursor[f] == queues[f].size()) continue;
      ctx.take(queues[f][cursor[f]], kFeatureNames[f]);
      progressed = true;
    }
    if (!progressed) break;
  }
  return ctx.finish();
}

SelectionResult select(const std::vector<PaperProfile>& pool,
                       const std::map<std::string, AuthorProfile>& authors,
                       const SelectionRequest& request, const ParityVector& pool_parity) {
  switch (request.algorithm) {
    case Algorithm::OverallDiversity:
      return overall_diversity(pool, authors, request, pool_parity);
    case Algorithm::MultiFaceted:
      return multifaceted(pool, authors, request, pool_parity);
    default:
      return round_robin(pool, authors, request);
  }
}

}  // namespace fairsel
