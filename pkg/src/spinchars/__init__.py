"""Exact spin character tables of double covers: the symmetric group, the
hyperoctahedral group, and hyperoctahedral wreath products over a finite
group, with all values in exact cyclotomic arithmetic and a brute-force
cover oracle for verification."""

from .exactnum import Cyclo, root_of_unity, sqrt_rational, parse_cyclo
from .partitions import (
    PVF,
    EMPTY_PVF,
    colorings,
    enumerate_partitions,
    enumerate_pvf,
    parity,
    strict_partitions_with_parity,
    z_order,
)
from .qfunctions import (
    PowerSumVector,
    char_value,
    pfaffian,
    power_sum_inner,
    q_general,
    q_one_row,
    q_two_row,
)
from .classdata import (
    ClassLabel,
    GroupData,
    GroupDataError,
    SplitClass,
    builtin_group,
    counting_identity_holds,
    enumerate_classes,
    group_from_spec,
    inner_product,
    is_split,
    load_group,
    split_centralizer_order,
    split_classes,
)
from .spintable import (
    CharacterRow,
    CharacterTable,
    TableInvariantError,
    associate_partner,
    odd_class_value_hyperoctahedral,
    odd_class_value_symmetric,
    odd_class_value_wreath,
    select_wreath_weight,
    star_product_values,
    table_from_json,
    table_spin_hyperoctahedral,
    table_spin_symmetric,
    table_spin_wreath,
    table_to_json,
    wreath_q_expand,
)
from .oracle import Cover, build_cover, canonical_representative, verify_table

__version__ = "0.1.0"
