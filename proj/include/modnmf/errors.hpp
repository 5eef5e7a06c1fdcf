#pragma once

#include <stdexcept>
#include <string>

namespace modnmf {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// -- graph construction --------------------------------------------------
struct SelfLoopError : Error { using Error::Error; };
struct DuplicateEdgeError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };

// -- partitions / memberships --------------------------------------------
struct EmptyCommunityError : Error { using Error::Error; };
struct AmbiguousRowError : Error { using Error::Error; };

// -- file ingestion -------------------------------------------------------
struct ParseError : Error { using Error::Error; };
struct IncompleteLabelingError : Error { using Error::Error; };

// -- objectives -----------------------------------------------------------
struct EmptyGraphError : Error { using Error::Error; };
struct IsolatedNodeError : Error { using Error::Error; };
struct SigmaTooSmallError : Error { using Error::Error; };
struct ShapeError : Error { using Error::Error; };
struct InvalidNullError : Error { using Error::Error; };

// -- generators -----------------------------------------------------------
struct ParamError : Error { using Error::Error; };
struct GenerationError : Error { using Error::Error; };

// -- solvers / metrics ----------------------------------------------------
struct NegativeInputError : Error { using Error::Error; };
struct DegenerateSeriesError : Error { using Error::Error; };

}  // namespace modnmf
