import torch

from pyequipart.torch import default_dtype


class torchtools:
    abs = staticmethod(torch.abs)
    where = staticmethod(torch.where)

    def __init__(self, device_name="cpu"):
        self.device_name = device_name

    @staticmethod
    def transpose(x):
        return x.t()

    @staticmethod
    def arraysum(x, axis=None):
        return x.sum() if axis is None else x.sum(dim=axis)

    @staticmethod
    def numpy(x):
        return x.detach().cpu().numpy()

    @staticmethod
    def matmul(x, y):
        return torch.matmul(x, y)

    @staticmethod
    def clip(x, lo, hi):
        return torch.clamp(x, lo, hi)

    @staticmethod
    def concat(arrays, axis=0):
        return torch.cat(arrays, dim=axis)

    @staticmethod
    def nonnegative(x):
        return (x >= 0).to(default_dtype)

    @staticmethod
    def view(x, s):
        return x.view(s)

    def zeros(self, shape, dtype=default_dtype):
        return torch.zeros(shape, dtype=dtype, device=self.device_name)

    def array(self, x, dtype=default_dtype, device=None):
        device = self.device_name if device is None else device
        return torch.as_tensor(x, dtype=dtype, device=device)
