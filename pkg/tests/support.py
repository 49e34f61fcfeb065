from functools import cache

from coxeter_core import build_system


@cache
def system(label):
    return build_system(label)


def element(sys, word):
    return sys.from_word(sys.parse_word(word))
