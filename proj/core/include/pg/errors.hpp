#pragma once

#include <stdexcept>
#include <string>

namespace pg {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rotation-system construction
struct NonSymmetricAdjacency : GraphError { using GraphError::GraphError; };
struct LoopOrMultiEdge : GraphError { using GraphError::GraphError; };
struct Disconnected : GraphError { using GraphError::GraphError; };
struct EulerViolation : GraphError { using GraphError::GraphError; };

// Structural operations
struct DualNotSimple : GraphError { using GraphError::GraphError; };
struct EdgeNotPresent : GraphError { using GraphError::GraphError; };
struct ResultDisconnected : GraphError { using GraphError::GraphError; };

// Generation
struct InfeasibleSpec : GraphError { using GraphError::GraphError; };

// Patterns / pipeline
struct UnsupportedSurplus : GraphError { using GraphError::GraphError; };
struct DegreeInfeasible : GraphError { using GraphError::GraphError; };
struct PreconditionViolated : GraphError { using GraphError::GraphError; };

// Verifier
struct PreconditionsNotMet : GraphError { using GraphError::GraphError; };
struct NoValidChordSet : GraphError { using GraphError::GraphError; };

// Upper-bound construction
struct NoDecomposition : GraphError { using GraphError::GraphError; };
struct ConstructionInvalid : GraphError { using GraphError::GraphError; };

// Formats
struct FormatError : GraphError { using GraphError::GraphError; };
struct TruncatedStream : FormatError { using FormatError::FormatError; };
struct BadHeader : FormatError { using FormatError::FormatError; };
struct NeighborOutOfRange : FormatError { using FormatError::FormatError; };
struct AsymmetricAdjacency : FormatError { using FormatError::FormatError; };
struct UnbalancedAdjacency : FormatError { using FormatError::FormatError; };
struct UnknownLabel : FormatError { using FormatError::FormatError; };

// Layout
struct NotThreeConnected : GraphError { using GraphError::GraphError; };
struct SolveFailed : GraphError { using GraphError::GraphError; };

} // namespace pg
