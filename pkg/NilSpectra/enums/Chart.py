from enum import IntEnum


class Chart(IntEnum):
    EXPONENTIAL = 0
    SPLIT_EXPONENTIAL = 1
