#include "distlap/error.hpp"

namespace distlap {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::MalformedGraph6: return "MalformedGraph6";
    case ErrorKind::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NoRootInBracket: return "NoRootInBracket";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::UnsupportedQuantity: return "UnsupportedQuantity";
    case ErrorKind::InconsistentClassification: return "InconsistentClassification";
    case ErrorKind::InvalidGraft: return "InvalidGraft";
    case ErrorKind::NoSuchEdge: return "NoSuchEdge";
    case ErrorKind::UnknownTheorem: return "UnknownTheorem";
    case ErrorKind::CorpusError: return "CorpusError";
  }
  return "Unknown";
}

}  // namespace distlap
