import doctest

import kzigzag.perm
import kzigzag.subseq


def test_module_doctests():
    for module in (kzigzag.perm, kzigzag.subseq):
        result = doctest.testmod(module)
        assert result.failed == 0, module.__name__
