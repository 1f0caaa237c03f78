// Copyright (c) 2026 The mpdns developers
// SPDX-License-Identifier: Apache-2.0

#ifndef MPDNS_ALIGNED_BUFFER_HPP
#define MPDNS_ALIGNED_BUFFER_HPP

#include <cstdlib>
#include <cstring>
#include <new>
#include <utility>

namespace mpdns {

/// 64-byte-aligned heap array. FFTW dispatches SIMD kernels based on the
/// alignment class of the buffers a plan was created with; keeping every
/// field buffer at maximal alignment lets one plan serve all of them through
/// the new-array execute interface.
template <typename T>
class AlignedBuffer {
 public:
  AlignedBuffer() = default;

  explicit AlignedBuffer(std::size_t size) : size_(size) {
    if (size_ == 0) return;
    void* p = nullptr;
    if (posix_memalign(&p, 64, size_ * sizeof(T)) != 0) throw std::bad_alloc();
    data_ = static_cast<T*>(p);
    std::memset(data_, 0, size_ * sizeof(T));
  }

  AlignedBuffer(const AlignedBuffer& other) : AlignedBuffer(other.size_) {
    if (size_ > 0) std::memcpy(data_, other.data_, size_ * sizeof(T));
  }

  AlignedBuffer(AlignedBuffer&& other) noexcept
      : data_(std::exchange(other.data_, nullptr)),
        size_(std::exchange(other.size_, 0)) {}

  AlignedBuffer& operator=(AlignedBuffer other) noexcept {
    std::swap(data_, other.data_);
    std::swap(size_, other.size_);
    return *this;
  }

  ~AlignedBuffer() { std::free(data_); }

  T* data() { return data_; }
  const T* data() const { return data_; }
  std::size_t size() const { return size_; }

 private:
  T* data_ = nullptr;
  std::size_t size_ = 0;
};

}  // namespace mpdns

#endif
