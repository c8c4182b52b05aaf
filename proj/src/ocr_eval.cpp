// Copyright 2026 The layoutkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "layoutkit/ocr_eval.hpp"

#include <algorithm>
#include <unordered_map>

#include "layoutkit/errors.hpp"
#include "layoutkit/kernels.hpp"
#include "layoutkit/text.hpp"

namespace layoutkit {

TokenSeq tokenize(std::string_view input) {
  const std::u32string s = text::decode_utf8(input);
  TokenSeq out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && text::is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !text::is_space(s[j])) ++j;
    std::size_t b = i, e = j;
    while (b < e && text::is_punctuation(s[b])) ++b;
    while (e > b && text::is_punctuation(s[e - 1])) --e;
    if (b < e) {
      std::u32string tok(s.begin() + b, s.begin() + e);
      for (auto& c : tok) c = text::fold_case(c);
      out.tokens.push_back(text::encode_utf8(tok));
    }
    i = j;
  }
  return out;
}

namespace {

using Ids = std::vector<std::int32_t>;

// Dense ids for gt tokens; tokens unseen in gt map to -1 and never match.
class Vocabulary {
 public:
  explicit Vocabulary(const TokenSeq& gt) {
    ids_.reserve(gt.size());
    for (const auto& t : gt.tokens) {
      auto [it, inserted] = index_.try_emplace(t, static_cast<std::int32_t>(index_.size()));
      ids_.push_back(it->second);
    }
  }
  const Ids& gt_ids() const noexcept { return ids_; }
  Ids encode(const TokenSeq& seq) const {
    Ids out;
    out.reserve(seq.size());
    for (const auto& t : seq.tokens) {
      auto it = index_.find(t);
      out.push_back(it == index_.end() ? -1 : it->second);
    }
    return out;
  }

 private:
  std::unordered_map<std::string, std::int32_t> index_;
  Ids ids_;
};

// blocked_prefix[i] = number of blocked gt positions before i.
std::vector<std::size_t> blocked_prefix(const std::vector<std::uint8_t>& blocked) {
  std::vector<std::size_t> p(blocked.size() + 1, 0);
  for (std::size_t i = 0; i < blocked.size(); ++i) p[i + 1] = p[i] + blocked[i];
  return p;
}

struct Window {
  bool found = false;
  std::size_t start = 0;
  std::int32_t score = -1;
};

Window best_window(const std::vector<std::int32_t>& scores, std::size_t len,
                   const std::vector<std::size_t>& prefix) {
  Window w;
  for (std::size_t s = 0; s < scores.size(); ++s) {
    if (prefix[s + len] - prefix[s] != 0) continue;
    if (scores[s] > w.score) {
      w = {true, s, scores[s]};
    }
  }
  return w;
}

}  // namespace

SegmentMatch match_interval(const TokenSeq& pred, const TokenSeq& gt,
                            std::span<const Interval> blocked) {
  if (pred.empty()) throw InvalidInput("match_interval: empty predicted segment");
  SegmentMatch m;
  if (gt.size() < pred.size()) return m;
  const Vocabulary vocab(gt);
  const auto scores = kernels::omp::window_scores(vocab.gt_ids(), vocab.encode(pred));
  std::vector<std::uint8_t> mask(gt.size(), 0);
  for (const auto& b : blocked) {
    for (std::size_t i = b.start; i < std::min(b.end, gt.size()); ++i) mask[i] = 1;
  }
  const Window w = best_window(scores, pred.size(), blocked_prefix(mask));
  if (w.found) {
    m.gt_interval = Interval{w.start, w.start + pred.size()};
    m.score = static_cast<std::size_t>(w.score);
  }
  return m;
}

std::vector<SegmentMatch> map_segments(std::span<const TokenSeq> segments, const TokenSeq& gt) {
  const std::size_t k = segments.size();
  std::vector<SegmentMatch> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i].segment_id = i;
  if (k == 0 || gt.empty()) return out;

  const Vocabulary vocab(gt);
  std::vector<std::vector<std::int32_t>> scores(k);
  std::vector<Window> best(k);
  std::vector<bool> pending(k, false);
  std::vector<std::uint8_t> blocked(gt.size(), 0);
  auto prefix = blocked_prefix(blocked);
  for (std::size_t i = 0; i < k; ++i) {
    if (segments[i].empty() || segments[i].size() > gt.size()) continue;
    scores[i] = kernels::omp::window_scores(vocab.gt_ids(), vocab.encode(segments[i]));
    best[i] = best_window(scores[i], segments[i].size(), prefix);
    pending[i] = true;
  }

  for (;;) {
    std::size_t pick = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (!pending[i] || !best[i].found) continue;
      if (pick == k || best[i].score > best[pick].score) pick = i;
    }
    if (pick == k || best[pick].score <= 0) break;

    const Interval iv{best[pick].start, best[pick].start + segments[pick].size()};
    out[pick].gt_interval = iv;
    out[pick].score = static_cast<std::size_t>(best[pick].score);
    pending[pick] = false;
    for (std::size_t i = iv.start; i < iv.end; ++i) blocked[i] = 1;
    prefix = blocked_prefix(blocked);

    // Blocking only removes windows, so a best window that survives stays best.
    for (std::size_t i = 0; i < k; ++i) {
      if (!pending[i] || !best[i].found) continue;
      const Interval cur{best[i].start, best[i].start + segments[i].size()};
      if (cur.intersects(iv)) best[i] = best_window(scores[i], segments[i].size(), prefix);
    }
  }
  return out;
}

namespace {

template <typename Seq>
std::size_t levenshtein_impl(const Seq& a, const Seq& b) {
  const std::size_t n = a.size(), m = b.size();
  if (n == 0) return m;
  if (m == 0) return n;
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= m; ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({sub, prev[j] + 1, cur[j - 1] + 1});
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

}  // namespace

std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  return levenshtein_impl(a, b);
}

std::size_t levenshtein(const TokenSeq& a, const TokenSeq& b) {
  return levenshtein_impl(a.tokens, b.tokens);
}

double edit_distance_norm(std::string_view pred, std::string_view gt) {
  const auto a = text::collapse_whitespace(text::decode_utf8(pred));
  const auto b = text::collapse_whitespace(text::decode_utf8(gt));
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 0.0;
  return static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest);
}

double word_edit_distance_norm(const TokenSeq& pred, const TokenSeq& gt) {
  const std::size_t longest = std::max(pred.size(), gt.size());
  if (longest == 0) return 0.0;
  return static_cast<double>(levenshtein(pred, gt)) / static_cast<double>(longest);
}

ReadOrder read_order_accuracy(std::span<const SegmentMatch> matches) {
  std::vector<std::size_t> starts;
  for (const auto& m : matches) {
    if (m.gt_interval) starts.push_back(m.gt_interval->start);
  }
  if (starts.empty()) throw InvalidInput("read_order_accuracy: no matched segments");
  // Patience sorting: tails[k] = smallest tail of a strictly increasing run of length k+1.
  std::vector<std::size_t> tails;
  for (std::size_t s : starts) {
    auto it = std::lower_bound(tails.begin(), tails.end(), s);
    if (it == tails.end()) {
      tails.push_back(s);
    } else {
      *it = s;
    }
  }
  ReadOrder r;
  r.n = starts.size();
  r.m = r.n - tails.size();
  r.roa = 1.0 - static_cast<double>(r.m) / static_cast<double>(r.n);
  return r;
}

double word_recall(const TokenSeq& pred, const TokenSeq& gt) {
  if (gt.empty()) throw InvalidInput("word_recall: empty ground truth");
  std::unordered_map<std::string_view, std::size_t> remaining;
  for (const auto& t : gt.tokens) ++remaining[t];
  std::size_t hits = 0;
  for (const auto& t : pred.tokens) {
    auto it = remaining.find(t);
    if (it != remaining.end() && it->second > 0) {
      --it->second;
      ++hits;
    }
  }
  return static_cast<double>(hits) / static_cast<double>(gt.size());
}

OcrReport evaluate_ocr(std::span<const std::string> segments, std::string_view gt,
                       const OcrOptions& options) {
  const TokenSeq gt_tokens = tokenize(gt);
  if (gt_tokens.empty()) throw InvalidInput("evaluate_ocr: ground truth has no words");

  std::vector<TokenSeq> seg_tokens;
  TokenSeq all;
  std::string joined;
  for (const auto& s : segments) {
    seg_tokens.push_back(tokenize(s));
    all.tokens.insert(all.tokens.end(), seg_tokens.back().tokens.begin(),
                      seg_tokens.back().tokens.end());
    if (!joined.empty()) joined.push_back('\n');
    joined += s;
  }

  OcrReport r;
  r.segments = segments.size();
  r.matches = map_segments(seg_tokens, gt_tokens);
  const bool any_matched = std::any_of(r.matches.begin(), r.matches.end(),
                                       [](const SegmentMatch& m) { return m.gt_interval.has_value(); });
  if (any_matched) {
    const auto ro = read_order_accuracy(r.matches);
    r.roa = ro.roa;
    r.m = ro.m;
    r.n = ro.n;
  }
  r.word_recall = word_recall(all, gt_tokens);
  r.edit_distance = options.edit == EditGranularity::character
                        ? edit_distance_norm(joined, gt)
                        : word_edit_distance_norm(all, gt_tokens);
  return r;
}

OcrCorpusReport aggregate_ocr(std::vector<OcrReport> pages, std::vector<PageFailure> failures,
                              EditGranularity edit) {
  OcrCorpusReport r;
  r.edit = edit;
  double ed = 0, rec = 0, roa = 0;
  std::size_t roa_pages = 0;
  for (const auto& p : pages) {
    ed += p.edit_distance;
    rec += p.word_recall;
    if (p.roa) {
      roa += *p.roa;
      ++roa_pages;
    }
  }
  if (!pages.empty()) {
    r.mean_edit_distance = ed / static_cast<double>(pages.size());
    r.mean_word_recall = rec / static_cast<double>(pages.size());
  }
  if (roa_pages > 0) r.mean_roa = roa / static_cast<double>(roa_pages);
  r.pages = std::move(pages);
  r.failures = std::move(failures);
  return r;
}

}  // namespace layoutkit
