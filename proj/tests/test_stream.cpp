#include <doctest.h>

#include <cstdint>
#include <vector>

#include "cpboot/stats.hpp"
#include "cpboot/stream.hpp"

using namespace cpboot;

TEST_SUITE("stream") {

TEST_CASE("same key gives identical draws") {
  const StreamKey key = StreamKey{42, {}}.child("exp", 3).child("rep", 7);
  RandomStream s1 = derive_stream(key);
  RandomStream s2 = derive_stream(key);
  for (int i = 0; i < 100; ++i) CHECK(s1.next_u64() == s2.next_u64());
}

TEST_CASE("path index changes the stream") {
  RandomStream s1 = derive_stream(StreamKey{42, {}}.child("rep", 0));
  RandomStream s2 = derive_stream(StreamKey{42, {}}.child("rep", 1));
  CHECK(s1.next_u64() != s2.next_u64());
}

TEST_CASE("empty path is a valid stream") {
  RandomStream s = derive_stream(StreamKey{7, {}});
  const double u = s.next_unit();
  CHECK(u >= 0.0);
  CHECK(u < 1.0);
}

TEST_CASE("golden words pin the generator across platforms") {
  RandomStream s = derive_stream(StreamKey{0, {}});
  // frozen from the first run; any change here is a compatibility break
  const std::uint64_t expected[3] = {17603550637309148625ull, 2840941918549654433ull,
                                     10056467832697170028ull};
  for (std::uint64_t e : expected) CHECK(s.next_u64() == e);
}

TEST_CASE("distinct paths decorrelate") {
  const std::size_t n = 10000;
  std::vector<double> a(n), b(n);
  RandomStream s1 = derive_stream(StreamKey{5, {}}.child("left", 0));
  RandomStream s2 = derive_stream(StreamKey{5, {}}.child("left", 1));
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = s1.next_unit();
    b[i] = s2.next_unit();
  }
  CHECK(std::abs(correlation(a, b)) < 0.05);
}

TEST_CASE("split detaches an unrelated stream") {
  RandomStream parent = derive_stream(StreamKey{11, {}});
  RandomStream child = parent.split();
  const std::size_t n = 10000;
  std::vector<double> a(n), b(n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i] = parent.next_unit();
    b[i] = child.next_unit();
  }
  CHECK(std::abs(correlation(a, b)) < 0.05);
}

TEST_CASE("uniform_index is in range and hits all cells") {
  RandomStream s = derive_stream(StreamKey{3, {}});
  std::vector<int> counts(10, 0);
  for (int i = 0; i < 10000; ++i) ++counts[s.uniform_index(10)];
  for (int c : counts) CHECK(c > 800);
}

}  // TEST_SUITE
