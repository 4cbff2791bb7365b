"""Edge buckets under vertex orders and the 2-locally-large property."""

__all__ = [
    "ClassificationRecord",
    "Status",
    "TxiPartition",
    "VertexOrder",
    "bucket_index",
    "classify_all",
    "count_witness_orders",
    "decide_2ll",
    "is_2ll_under",
    "random_orders_fail",
    "txi_partition",
]

from localrainbow.core.order import VertexOrder

from .classify import (
    ClassificationRecord,
    Status,
    classify_all,
    count_witness_orders,
    decide_2ll,
    random_orders_fail,
)
from .partition import TxiPartition, bucket_index, is_2ll_under, txi_partition
