// Copyright 2026 The toolcall Authors.
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

#include "toolcall/providers/embedder.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <unordered_set>

#include "toolcall/error.h"
#include "toolcall/util/rng.h"
#include "toolcall/util/text.h"

namespace toolcall {
namespace {

uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

double cosine(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "cosine of vectors with dimensions " + std::to_string(u.size()) +
                    " and " + std::to_string(v.size()));
  }
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (size_t i = 0; i < u.size(); ++i) {
    dot += u[i] * v[i];
    nu += u[i] * u[i];
    nv += v[i] * v[i];
  }
  if (nu == 0.0 || nv == 0.0) {
    throw Error(ErrorCode::kZeroVector, "cosine of a zero vector");
  }
  const double c = dot / (std::sqrt(nu) * std::sqrt(nv));
  return std::clamp(c, -1.0, 1.0);
}

CachingEmbedder::CachingEmbedder(std::shared_ptr<Embedder> backend,
                                 size_t batch_size, size_t concurrency)
    : backend_(std::move(backend)),
      batch_size_(batch_size == 0 ? 1 : batch_size),
      concurrency_(concurrency == 0 ? 1 : concurrency) {}

EmbeddingBatch CachingEmbedder::embed(const std::vector<std::string>& texts) {
  if (texts.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "embed called with no texts");
  }
  std::vector<std::string> missing;
  {
    std::lock_guard<std::mutex> lock(mu_);
    std::unordered_set<std::string> queued;
    for (const std::string& t : texts) {
      if (!cache_.contains(t) && queued.insert(t).second) missing.push_back(t);
    }
  }

  const size_t batches = (missing.size() + batch_size_ - 1) / batch_size_;
  std::vector<std::vector<Vector>> results(batches);
  std::vector<std::exception_ptr> errors(batches);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t b = next++; b < batches; b = next++) {
      const size_t begin = b * batch_size_;
      const size_t end = std::min(missing.size(), begin + batch_size_);
      try {
        results[b] = backend_->embed_batch(
            std::span<const std::string>(missing.data() + begin, end - begin));
        if (results[b].size() != end - begin) {
          throw Error(ErrorCode::kDimensionMismatch,
                      "embedder returned " + std::to_string(results[b].size()) +
                          " vectors for " + std::to_string(end - begin) +
                          " texts");
        }
      } catch (...) {
        errors[b] = std::current_exception();
      }
    }
  };
  const size_t threads = std::min(concurrency_, batches);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::lock_guard<std::mutex> lock(mu_);
  backend_calls_ += batches;
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (size_t b = 0; b < batches; ++b) {
    for (size_t i = 0; i < results[b].size(); ++i) {
      Vector& v = results[b][i];
      if (dimension_ == 0) dimension_ = v.size();
      if (v.size() != dimension_ || v.empty()) {
        throw Error(ErrorCode::kDimensionMismatch,
                    "embedder returned dimension " + std::to_string(v.size()) +
                        ", expected " + std::to_string(dimension_));
      }
      cache_.emplace(missing[b * batch_size_ + i], std::move(v));
    }
  }
  EmbeddingBatch out;
  out.inputs = texts;
  out.dimension = dimension_;
  for (const std::string& t : texts) out.vectors.push_back(cache_.at(t));
  return out;
}

size_t CachingEmbedder::backend_calls() const {
  std::lock_guard<std::mutex> lock(mu_);
  return backend_calls_;
}

HashingEmbedder::HashingEmbedder(size_t dimension, uint64_t seed)
    : dimension_(dimension == 0 ? 1 : dimension), seed_(seed) {}

std::vector<Vector> HashingEmbedder::embed_batch(
    std::span<const std::string> texts) {
  std::vector<Vector> out;
  out.reserve(texts.size());
  for (const std::string& text : texts) {
    Vector v(dimension_, 0.0);
    std::vector<std::string> tokens = word_tokens(text);
    if (tokens.empty()) tokens.push_back("");
    for (const std::string& tok : tokens) {
      const uint64_t h = derive_seed(seed_, fnv1a(tok));
      v[h % dimension_] += (h >> 63) ? -1.0 : 1.0;
    }
    // Opposite signs on one slot can cancel out; keep the vector non-zero.
    bool zero = true;
    for (double x : v) zero = zero && x == 0.0;
    if (zero) v[derive_seed(seed_, fnv1a(text)) % dimension_] = 1.0;
    out.push_back(std::move(v));
  }
  return out;
}

TableEmbedder::TableEmbedder(std::map<std::string, Vector> table)
    : table_(std::move(table)) {}

std::vector<Vector> TableEmbedder::embed_batch(
    std::span<const std::string> texts) {
  std::vector<Vector> out;
  for (const std::string& t : texts) {
    auto it = table_.find(t);
    if (it == table_.end()) {
      throw Error(ErrorCode::kProviderError, "no vector for text '" + t + "'");
    }
    out.push_back(it->second);
  }
  return out;
}

}  // namespace toolcall
