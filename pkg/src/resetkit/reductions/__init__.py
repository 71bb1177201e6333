from .fsat import FsatGadget, build_fsat_gadget, decode_fsat
from .maxsat import MaxSatGadget, binarize, build_maxsat_gadget, recover_maxsat, selector
from .satunsat import ChainGadget, SatUnsatGadget, build_sat_unsat_gadget, literal_sets, normalize_pair
from .verify import Claim, Report, verify_fsat, verify_maxsat, verify_parsimony, verify_sat_unsat

__all__ = [
    "ChainGadget",
    "Claim",
    "FsatGadget",
    "MaxSatGadget",
    "Report",
    "SatUnsatGadget",
    "binarize",
    "build_fsat_gadget",
    "build_maxsat_gadget",
    "build_sat_unsat_gadget",
    "decode_fsat",
    "literal_sets",
    "normalize_pair",
    "recover_maxsat",
    "selector",
    "verify_fsat",
    "verify_maxsat",
    "verify_parsimony",
    "verify_sat_unsat",
]
