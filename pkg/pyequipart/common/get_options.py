import re
from collections import OrderedDict

import pyequipart.config

############################################################
#     define backend
############################################################


class SetBackend:
    """
    This class is used to centralize the choice of array backend used by the cell reductions.
    """

    lang = OrderedDict([("numpy", 0), ("torch", 1)])
    dev = OrderedDict([("cpu", 0), ("gpu", 1)])

    possible_options_list = [
        "auto",
        "numpy",
        "torch",
        "torch_cpu",
        "torch_gpu",
    ]

    def define_tag_backend(self, backend):
        """
        Make a good guess for the backend... available methods are:
           numpy : reductions performed by numpy on the host
           torch_cpu : reductions performed by torch on the host
           torch_gpu : reductions performed by torch on the device

        :param backend (str)

        :return (tagLang, tagDevice)
        """

        # check that the option is valid
        if backend not in self.possible_options_list:
            raise ValueError(
                "Invalid backend. Should be one of {}".format(
                    self.possible_options_list
                )
            )

        # auto : numpy unless the user asked for something else
        if backend == "auto":
            return self.lang["numpy"], self.dev["cpu"]

        split_backend = re.split("_", backend)
        if split_backend[0] == "torch" and not pyequipart.config.torch_found:
            raise ValueError("The torch backend was requested but torch is not installed.")

        if len(split_backend) == 1:  # numpy or torch
            return self.lang[split_backend[0]], self._find_dev(split_backend[0])
        else:  # torch_cpu or torch_gpu
            return self.lang[split_backend[0]], self.dev[split_backend[1]]

    def define_backend(self, backend):
        tagLang, tagDevice = self.define_tag_backend(backend)
        return list(self.lang)[tagLang], list(self.dev)[tagDevice]

    @staticmethod
    def _find_dev(lang):
        if lang == "torch":
            import torch

            return int(torch.cuda.is_available())
        return 0


def get_tag_backend(backend=None, str=True):
    """
    entry point to get the correct backend
    """
    if backend is None:
        backend = pyequipart.config.backend
    res = SetBackend()
    if not str:
        return res.define_tag_backend(backend)
    else:
        return res.define_backend(backend)
