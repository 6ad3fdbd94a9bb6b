#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace dilsa {

// Little-endian binary IO with length-prefixed strings and vectors.
// All artifact files go through these helpers so the layouts stay
// uniform and failures carry the file path.

class BinaryWriter {
public:
    explicit BinaryWriter(const std::string& path);

    void u8(std::uint8_t v);
    void u32(std::uint32_t v);
    void u64(std::uint64_t v);
    void i64(std::int64_t v);
    void f32(float v);
    void f64(double v);
    void str(const std::string& s);
    void bytes(const void* data, std::size_t n);
    void vec_f32(const std::vector<float>& v);
    void vec_f64(const std::vector<double>& v);
    void vec_u32(const std::vector<std::uint32_t>& v);
    void vec_u64(const std::vector<std::uint64_t>& v);

private:
    std::string path_;
    std::ofstream out_;
    void check();
};

class BinaryReader {
public:
    explicit BinaryReader(const std::string& path);

    std::uint8_t u8();
    std::uint32_t u32();
    std::uint64_t u64();
    std::int64_t i64();
    float f32();
    double f64();
    std::string str();
    void bytes(void* data, std::size_t n);
    std::vector<float> vec_f32();
    std::vector<double> vec_f64();
    std::vector<std::uint32_t> vec_u32();
    std::vector<std::uint64_t> vec_u64();

    // Reads expect.size() raw bytes and throws unless they match.
    void expect_magic(const std::string& expect);

    const std::string& path() const { return path_; }

private:
    std::string path_;
    std::ifstream in_;
    void check();
};

// FNV-1a over a canonical rendering of key=value lines. Callers feed
// the settings that shape artifact contents; file paths stay out so
// moving inputs around does not invalidate caches.
class ConfigHasher {
public:
    void field(const std::string& key, const std::string& value);
    void field(const std::string& key, double value);
    void field(const std::string& key, std::int64_t value);
    std::uint64_t digest() const { return hash_; }
    std::string hex() const;

private:
    std::uint64_t hash_ = 1469598103934665603ull;
    void feed(const std::string& s);
};

} // namespace dilsa
