#pragma once

#include <fftw3.h>

#include <complex>
#include <cstddef>
#include <map>
#include <mutex>
#include <new>
#include <tuple>
#include <vector>

namespace fracscatter
{
// Storage from fftw_malloc so every buffer has the alignment the cached plans
// were created with; fftw_execute_dft requires that.
template<typename T>
struct fftw_allocator
{
  using value_type = T;

  fftw_allocator() = default;
  template<typename U>
  fftw_allocator(fftw_allocator<U> const &) noexcept
  {}

  T *allocate(std::size_t n)
  {
    void *p = fftw_malloc(n * sizeof(T));
    if (p == nullptr && n != 0)
      throw std::bad_alloc();
    return static_cast<T *>(p);
  }
  void deallocate(T *p, std::size_t) noexcept { fftw_free(p); }

  template<typename U>
  bool operator==(fftw_allocator<U> const &) const noexcept
  {
    return true;
  }
};

using complex_t = std::complex<double>;
using cvector   = std::vector<complex_t, fftw_allocator<complex_t>>;

enum class fft_direction
{
  forward  = FFTW_FORWARD,
  backward = FFTW_BACKWARD
};

namespace detail
{
// Process-wide cache of in-place plans. Planning is serialized (the FFTW
// planner is not reentrant); executing a cached plan on fresh arrays is.
// FFTW_ESTIMATE keeps the chosen algorithm, and hence every rounding
// pattern, identical from run to run.
class plan_cache
{
public:
  static plan_cache &instance()
  {
    static plan_cache cache;
    return cache;
  }

  fftw_plan get(int dim, std::size_t n, fft_direction dir)
  {
    std::lock_guard lock(mutex_);
    auto const key = std::make_tuple(dim, n, static_cast<int>(dir));
    if (auto it = plans_.find(key); it != plans_.end())
      return it->second;

    std::size_t const total = dim == 1 ? n : n * n;
    auto *scratch = static_cast<fftw_complex *>(fftw_malloc(total * sizeof(fftw_complex)));
    if (scratch == nullptr)
      throw std::bad_alloc();
    int const sign = static_cast<int>(dir);
    int const ni   = static_cast<int>(n);
    fftw_plan plan = dim == 1
                         ? fftw_plan_dft_1d(ni, scratch, scratch, sign, FFTW_ESTIMATE)
                         : fftw_plan_dft_2d(ni, ni, scratch, scratch, sign, FFTW_ESTIMATE);
    fftw_free(scratch);
    plans_.emplace(key, plan);
    return plan;
  }

  plan_cache(plan_cache const &)            = delete;
  plan_cache &operator=(plan_cache const &) = delete;

private:
  plan_cache() = default;
  ~plan_cache()
  {
    for (auto &[key, plan] : plans_)
      fftw_destroy_plan(plan);
  }

  std::mutex mutex_;
  std::map<std::tuple<int, std::size_t, int>, fftw_plan> plans_;
};
} // namespace detail

/// Unnormalized in-place DFT over an fftw_malloc'd buffer of n^dim values.
inline void fft_inplace(complex_t *data, int dim, std::size_t n, fft_direction dir)
{
  fftw_plan plan = detail::plan_cache::instance().get(dim, n, dir);
  auto *p        = reinterpret_cast<fftw_complex *>(data);
  fftw_execute_dft(plan, p, p);
}

} // namespace fracscatter
