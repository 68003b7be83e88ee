#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace topo {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SelfLoop : public Error {
 public:
  explicit SelfLoop(std::uint64_t v)
      : Error("self-loop at vertex " + std::to_string(v)), vertex(v) {}
  std::uint64_t vertex;
};

class DuplicateEdge : public Error {
 public:
  DuplicateEdge(std::uint64_t u, std::uint64_t v)
      : Error("duplicate edge {" + std::to_string(u) + ", " + std::to_string(v) + "}"),
        u(u),
        v(v) {}
  std::uint64_t u, v;
};

class VertexOutOfRange : public Error {
 public:
  VertexOutOfRange(std::uint64_t id, std::uint64_t vertex_count)
      : Error("vertex id " + std::to_string(id) + " out of range (vertex count " +
              std::to_string(vertex_count) + ")"),
        id(id) {}
  std::uint64_t id;
};

class Disconnected : public Error {
 public:
  explicit Disconnected(std::uint64_t unreached)
      : Error("graph is disconnected: vertex " + std::to_string(unreached) + " is unreachable"),
        unreached_vertex(unreached) {}
  std::uint64_t unreached_vertex;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class MalformedOrbits : public Error {
 public:
  using Error::Error;
};

class InsufficientSamples : public Error {
 public:
  using Error::Error;
};

class DuplicateSampleParameter : public Error {
 public:
  explicit DuplicateSampleParameter(long long m)
      : Error("duplicate sample parameter m=" + std::to_string(m)), m(m) {}
  long long m;
};

/// Raised when more samples than degree+1 are supplied and they do not lie
/// on a single polynomial of the requested degree.
class InconsistentSamples : public Error {
 public:
  using Error::Error;
};

/// Malformed edge-list text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  std::size_t line;
};

}  // namespace topo
