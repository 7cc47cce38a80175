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

#ifndef TOOLCALL_PROVIDERS_EMBEDDER_H_
#define TOOLCALL_PROVIDERS_EMBEDDER_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace toolcall {

using Vector = std::vector<double>;

// Throws Error(kDimensionMismatch) for unequal sizes and Error(kZeroVector)
// when either vector has zero norm.
double cosine(std::span<const double> u, std::span<const double> v);

class Embedder {
 public:
  virtual ~Embedder() = default;
  // One vector per text, in input order. Must be thread-safe.
  virtual std::vector<Vector> embed_batch(std::span<const std::string> texts) = 0;
};

struct EmbeddingBatch {
  std::vector<std::string> inputs;
  std::vector<Vector> vectors;
  size_t dimension = 0;
};

// Splits work into fixed-size batches, issues up to `concurrency` of them
// at once, and remembers every vector by exact text for the rest of the run.
class CachingEmbedder {
 public:
  explicit CachingEmbedder(std::shared_ptr<Embedder> backend,
                           size_t batch_size = 64, size_t concurrency = 1);

  // Throws Error(kInvalidArgument) for an empty input and
  // Error(kDimensionMismatch) when the backend returns vectors of varying
  // size or the wrong number of vectors.
  EmbeddingBatch embed(const std::vector<std::string>& texts);
  size_t backend_calls() const;

 private:
  std::shared_ptr<Embedder> backend_;
  size_t batch_size_;
  size_t concurrency_;
  mutable std::mutex mu_;
  std::unordered_map<std::string, Vector> cache_;
  size_t dimension_ = 0;
  size_t backend_calls_ = 0;
};

// Offline embedder: each lowercase word token is hashed to a signed basis
// direction. Identical texts give identical vectors; texts with disjoint
// vocabularies are orthogonal barring hash collisions.
class HashingEmbedder : public Embedder {
 public:
  explicit HashingEmbedder(size_t dimension = 256, uint64_t seed = 0);
  std::vector<Vector> embed_batch(std::span<const std::string> texts) override;

 private:
  size_t dimension_;
  uint64_t seed_;
};

// Offline embedder over a fixed text -> vector table. Unknown texts are a
// provider error.
class TableEmbedder : public Embedder {
 public:
  explicit TableEmbedder(std::map<std::string, Vector> table);
  std::vector<Vector> embed_batch(std::span<const std::string> texts) override;

 private:
  std::map<std::string, Vector> table_;
};

}  // namespace toolcall

#endif  // TOOLCALL_PROVIDERS_EMBEDDER_H_
